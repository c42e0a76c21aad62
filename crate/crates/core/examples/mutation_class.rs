//! Enumerate a mutation class and save it as an archive.
//!
//! ```text
//! cargo run --example mutation_class [TYPE RANK M [OUT]]
//! cargo run --example mutation_class Dtilde 4 2 /tmp/dtilde4
//! ```

use std::path::PathBuf;

use colourq::document::{load_archive, write_archive};
use colourq::{emit_quiver, enumerate, Diagram, DiagramType, EnumerationConfig, Orientation};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ty: DiagramType = args.first().map_or("A", String::as_str).parse().unwrap();
    let rank: usize = args.get(1).map_or(Ok(3), |s| s.parse()).unwrap();
    let m: usize = args.get(2).map_or(Ok(2), |s| s.parse()).unwrap();

    let seed = Diagram::new(ty, rank).unwrap().seed(&Orientation::Linear, m).unwrap();
    let res = enumerate(&seed, &EnumerationConfig::default()).unwrap();
    println!("{ty}{rank}, m = {m}: {}, {} quivers, depth {}", res.status, res.size(), res.depth_reached);
    for rep in res.sorted().iter().take(10) {
        println!("  depth {:>2}  {}", rep.depth, emit_quiver(&rep.quiver));
    }
    if res.size() > 10 {
        println!("  ... {} more", res.size() - 10);
    }

    if let Some(out) = args.get(3).map(PathBuf::from) {
        write_archive(&out, &res).unwrap();
        let back = load_archive(&out).unwrap();
        println!("wrote {} representatives to {}", back.size, out.display());
    }
}
