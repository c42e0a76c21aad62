//! Mutation-class sizes for small Dynkin and extended Dynkin seeds.
//!
//! ```text
//! cargo run --release --example census [MAX_M]
//! ```

use std::time::Instant;

use colourq::{enumerate, Diagram, DiagramType, EnumerationConfig, Orientation};

fn main() {
    let max_m: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let diagrams = [
        (DiagramType::A, 2),
        (DiagramType::A, 3),
        (DiagramType::A, 4),
        (DiagramType::A, 5),
        (DiagramType::D, 4),
        (DiagramType::D, 5),
        (DiagramType::ATilde, 2),
        (DiagramType::ATilde, 3),
        (DiagramType::DTilde, 4),
    ];
    println!("{:<10} {:>3} {:>14} {:>8} {:>10}", "diagram", "m", "status", "size", "ms");
    for (ty, rank) in diagrams {
        let d = Diagram::new(ty, rank).unwrap();
        for m in 1..=max_m {
            let seed = d.seed(&Orientation::Linear, m).unwrap();
            let start = Instant::now();
            let res = enumerate(&seed, &EnumerationConfig::default()).unwrap();
            println!(
                "{:<10} {:>3} {:>14} {:>8} {:>10}",
                d.to_string(),
                m,
                res.status.to_string(),
                res.size(),
                start.elapsed().as_millis()
            );
        }
    }
}
