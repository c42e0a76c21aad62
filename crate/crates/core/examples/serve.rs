//! Run the HTTP service and call it once.
//!
//! ```text
//! cargo run --example serve            # one round trip, then exit
//! cargo run --example serve -- --stay  # keep serving on 127.0.0.1:8793
//! ```

use std::net::SocketAddr;

use colourq::service::{handle, router, DEFAULT_PORT};
use tokio::io::{AsyncReadExt, AsyncWriteExt};

const BODY: &str =
    r#"{"quiver":{"m":2,"vertices":3,"arrows":[[0,1,0,1],[1,0,2,1],[1,2,0,1],[2,1,2,1]]},"params":{"vertex":0}}"#;

#[tokio::main]
async fn main() {
    let stay = std::env::args().any(|a| a == "--stay");
    let addr: SocketAddr = ([127, 0, 0, 1], if stay { DEFAULT_PORT } else { 0 }).into();
    let listener = tokio::net::TcpListener::bind(addr).await.unwrap();
    let addr = listener.local_addr().unwrap();
    println!("listening on http://{addr}");
    let server = tokio::spawn(async move { axum::serve(listener, router(None)).await });

    let mut stream = tokio::net::TcpStream::connect(addr).await.unwrap();
    let request = format!(
        "POST /api/mutate HTTP/1.1\r\nHost: {addr}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{BODY}",
        BODY.len()
    );
    stream.write_all(request.as_bytes()).await.unwrap();
    let mut response = String::new();
    stream.read_to_string(&mut response).await.unwrap();
    println!("{}", response.split("\r\n\r\n").nth(1).unwrap_or_default());

    // the same request without a socket
    println!("{}", handle("POST", "/api/mutate", BODY.as_bytes()).body);

    if stay {
        server.await.unwrap().unwrap();
    }
}
