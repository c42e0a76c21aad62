//! Read, check and write quiver documents.
//!
//! ```text
//! cargo run --example documents [FILE]
//! ```

use colourq::document::{emit_gabriel, parse_quiver_permissive};
use colourq::{emit_quiver, gabriel, parse_quiver, validate};

const BROKEN: &str = r#"{"m":2,"vertices":3,"arrows":[[0,1,0,1],[1,2,0,1]]}"#;

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read(path).unwrap(),
        None => br#"{"m":2,"vertices":3,"arrows":[[0,1,0,1],[1,0,2,1],[1,2,0,1],[2,1,2,1]]}"#.to_vec(),
    };
    let q = parse_quiver(&text).unwrap();
    println!("quiver   {}", emit_quiver(&q));
    println!("gabriel  {}", emit_gabriel(&gabriel(&q)));

    match parse_quiver(BROKEN.as_bytes()) {
        Err(e) => println!("strict parse rejects: {e}"),
        Ok(_) => unreachable!(),
    }
    let loose = parse_quiver_permissive(BROKEN.as_bytes()).unwrap();
    for v in validate(&loose) {
        println!("  {v}");
    }
    match parse_quiver(br#"{"m":2,"vertices":3,"arrows":[[0,9,0,1]]}"#) {
        Err(e) => println!("schema error: {e}"),
        Ok(_) => unreachable!(),
    }
}
