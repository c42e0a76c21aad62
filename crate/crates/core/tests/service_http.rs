mod common;

use std::net::SocketAddr;
use std::path::PathBuf;

use colourq::service::router;
use common::*;
use serde_json::{json, Value};
use tokio::io::{AsyncReadExt, AsyncWriteExt};
use tokio::net::{TcpListener, TcpStream};

async fn start(assets: Option<PathBuf>) -> SocketAddr {
    let listener = TcpListener::bind("127.0.0.1:0").await.unwrap();
    let addr = listener.local_addr().unwrap();
    tokio::spawn(async move { axum::serve(listener, router(assets)).await.unwrap() });
    addr
}

async fn request(addr: SocketAddr, method: &str, path: &str, body: &str) -> (u16, String, String) {
    request_with(addr, method, path, "", body).await
}

/// Sends one HTTP/1.1 request and returns (status, lowercased headers, body).
async fn request_with(addr: SocketAddr, method: &str, path: &str, extra: &str, body: &str) -> (u16, String, String) {
    let mut stream = TcpStream::connect(addr).await.unwrap();
    let head = format!(
        "{method} {path} HTTP/1.1\r\nHost: localhost\r\n{extra}Content-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n",
        body.len()
    );
    stream.write_all(head.as_bytes()).await.unwrap();
    stream.write_all(body.as_bytes()).await.unwrap();
    let mut raw = Vec::new();
    stream.read_to_end(&mut raw).await.unwrap();
    let text = String::from_utf8(raw).unwrap();
    let (headers, body) = text.split_once("\r\n\r\n").unwrap();
    let status = headers.split_whitespace().nth(1).unwrap().parse().unwrap();
    (status, headers.to_ascii_lowercase(), body.to_string())
}

fn quiver_json(name: &str) -> Value {
    let mut v: Value = serde_json::from_slice(&fixture(name)).unwrap();
    v.as_object_mut().unwrap().remove("source");
    v
}

async fn post(addr: SocketAddr, route: &str, quiver: Value, params: Value) -> (u16, Value) {
    let body = json!({ "quiver": quiver, "params": params }).to_string();
    let (status, _, text) = request(addr, "POST", route, &body).await;
    (status, serde_json::from_str(&text).unwrap())
}

#[tokio::test(flavor = "multi_thread")]
async fn health_and_routing() {
    let addr = start(None).await;
    let (status, headers, body) = request(addr, "GET", "/api/health", "").await;
    assert_eq!(status, 200);
    assert!(headers.contains("content-type: application/json"));
    assert_eq!(serde_json::from_str::<Value>(&body).unwrap(), json!({"ok": true, "result": "ok"}));
    assert_eq!(request(addr, "GET", "/api/unknown", "").await.0, 404);
    assert_eq!(request(addr, "GET", "/api/mutate", "").await.0, 405);
    let (status, _, body) = request(addr, "POST", "/api/mutate", "{not json").await;
    assert_eq!(status, 400);
    assert_eq!(serde_json::from_str::<Value>(&body).unwrap()["error"]["code"], "bad_json");
}

#[tokio::test(flavor = "multi_thread")]
async fn mutate_matches_cli_bytes() {
    let addr = start(None).await;
    let names = [
        "a3_seed.json",
        "a3_mu0.json",
        "a3_mu0_mu0.json",
        "a3_class_1.json",
        "a3_class_2.json",
        "a3_class_3.json",
        "a3_class_4.json",
        "a3_class_5.json",
        "a3_class_6.json",
        "a3_class_7_listed.json",
        "a3_class_7.json",
    ];
    for name in names {
        for j in 0..3 {
            let (status, v) = post(addr, "/api/mutate", quiver_json(name), json!({ "vertex": j })).await;
            assert_eq!(status, 200, "{name}");
            let mut out = Vec::new();
            let code = colourq::cli::run(
                ["colourq", "mutate", &fixture_path(name), "--at", &j.to_string()],
                &mut out,
                &mut Vec::new(),
            );
            assert_eq!(code, 0);
            assert_eq!(v["result"].to_string() + "\n", String::from_utf8(out).unwrap(), "{name} at {j}");
            let q = colourq::parse_quiver(v["result"].to_string().as_bytes()).unwrap();
            assert_eq!(v["canonical"], colourq::canonical_form(&q).to_hex());
        }
    }
}

#[tokio::test(flavor = "multi_thread")]
async fn error_statuses() {
    let addr = start(None).await;
    let (status, v) = post(addr, "/api/mutate", quiver_json("a3_seed.json"), json!({ "vertex": 99 })).await;
    assert_eq!((status, v["error"]["code"].as_str()), (422, Some("vertex_out_of_range")));
    let (status, v) = post(addr, "/api/mutate", quiver_json("missing_reverse.json"), json!({ "vertex": 0 })).await;
    assert_eq!((status, v["error"]["code"].as_str()), (422, Some("invalid_quiver")));
    let (status, v) = post(addr, "/api/validate", quiver_json("missing_reverse.json"), json!({})).await;
    assert_eq!(status, 200);
    assert_eq!(v["result"]["valid"], false);
    assert_eq!(v["result"]["violations"].as_array().unwrap().len(), 4);
    let (status, v) = post(addr, "/api/mutate", quiver_json("a3_seed.json"), json!({ "vertx": 0 })).await;
    assert_eq!((status, v["error"]["code"].as_str()), (400, Some("schema")));
    let (status, _) = post(addr, "/api/mutate_seq", quiver_json("a3_seed.json"), json!({ "vertices": [0, 7] })).await;
    assert_eq!(status, 422);
}

#[tokio::test(flavor = "multi_thread")]
async fn enumerate_pages_and_classify() {
    let addr = start(None).await;
    let seed = quiver_json("a3_seed.json");
    let (_, first) = post(addr, "/api/enumerate", seed.clone(), json!({ "page_size": 4 })).await;
    let first = &first["result"];
    assert_eq!((first["status"].as_str(), first["size"].as_u64()), (Some("Complete"), Some(7)));
    let token = first["next_token"].as_str().unwrap().to_string();
    let (_, second) = post(addr, "/api/enumerate", seed.clone(), json!({ "page_size": 4, "token": token })).await;
    let second = &second["result"];
    assert!(second["next_token"].is_null());
    let mut forms: Vec<String> = first["representatives"]
        .as_array()
        .unwrap()
        .iter()
        .chain(second["representatives"].as_array().unwrap())
        .map(|r| r["canonical"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(forms.len(), 7);
    let sorted = {
        let mut s = forms.clone();
        s.sort();
        s
    };
    assert_eq!(forms, sorted);
    forms.dedup();
    assert_eq!(forms.len(), 7);

    let (_, capped) = post(addr, "/api/enumerate", seed.clone(), json!({ "max": 2 })).await;
    assert_eq!(capped["result"]["status"], "BoundExceeded");

    let (_, v) = post(addr, "/api/classify", seed, json!({})).await;
    assert_eq!(v["result"]["tag"], "Finite");
    let (_, v) = post(addr, "/api/classify", quiver_json("wild3.json"), json!({ "max": 2000 })).await;
    assert_eq!(v["result"]["tag"], "Infinite");
    assert_eq!(v["result"]["reason"], "component Other");
}

#[tokio::test(flavor = "multi_thread")]
async fn gabriel_and_canonical_routes() {
    let addr = start(None).await;
    let (_, v) = post(addr, "/api/gabriel", quiver_json("a3_seed.json"), json!({})).await;
    assert_eq!(v["result"], json!({"vertices": 3, "arrows": [[0, 1, 1], [1, 2, 1]]}));
    let (_, a) = post(addr, "/api/canonical", quiver_json("a3_class_2.json"), json!({})).await;
    let (_, b) = post(addr, "/api/canonical", quiver_json("a3_mu0.json"), json!({})).await;
    assert_eq!(a["result"]["canonical"], b["result"]["canonical"]);
}

#[tokio::test(flavor = "multi_thread")]
async fn serves_static_assets_beside_api() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("index.html"), "<p>explorer</p>").unwrap();
    let addr = start(Some(dir.path().to_path_buf())).await;
    let (status, _, body) = request(addr, "GET", "/index.html", "").await;
    assert_eq!((status, body.as_str()), (200, "<p>explorer</p>"));
    assert_eq!(request(addr, "GET", "/api/health", "").await.0, 200);
    let preflight = "Origin: http://localhost:5173\r\nAccess-Control-Request-Method: POST\r\n";
    let (status, headers, _) = request_with(addr, "OPTIONS", "/api/mutate", preflight, "").await;
    assert_eq!(status, 200);
    assert!(headers.contains("access-control-allow-origin: *"), "{headers}");
}
