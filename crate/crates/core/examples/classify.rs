//! Decide finiteness of mutation classes from graph shape.
//!
//! ```text
//! cargo run --example classify
//! ```

use colourq::{
    classify_graph, predict_finiteness, underlying_graph, ColouredQuiver, Diagram, DiagramType, EnumerationConfig,
    Orientation, UndirectedMultigraph,
};

fn coloured(n: usize, m: usize, arrows: &[(usize, usize, usize, u64)]) -> ColouredQuiver {
    ColouredQuiver::symmetric(n, m, arrows).unwrap()
}

fn main() {
    for (ty, rank) in [(DiagramType::E, 8), (DiagramType::ETilde, 7), (DiagramType::DTilde, 6)] {
        let g = Diagram::new(ty, rank).unwrap().graph();
        println!("{:<8} classifies as {}", format!("{ty}{rank}"), classify_graph(&g).unwrap());
    }
    let star = UndirectedMultigraph::from_edges(6, &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1), (0, 5, 1)]);
    println!("{:<8} classifies as {}", "5-star", classify_graph(&star).unwrap());

    let cfg = EnumerationConfig::with_max(5000);
    let cases = [
        ("linear D5, m = 3", Diagram::new(DiagramType::D, 5).unwrap().seed(&Orientation::Linear, 3).unwrap()),
        ("Kronecker, m = 2", coloured(2, 2, &[(0, 1, 0, 2)])),
        ("five arrows on two vertices", coloured(2, 1, &[(0, 1, 0, 5)])),
        ("triple arrows on a path", coloured(3, 1, &[(0, 1, 0, 3), (1, 2, 0, 3)])),
        ("inner A3 member", coloured(3, 2, &[(0, 1, 1, 1), (1, 2, 1, 1)])),
    ];
    for (name, q) in cases {
        let verdict = predict_finiteness(&q, &cfg).unwrap();
        println!("{name:<28} {verdict}");
        if let Some(w) = &verdict.witness {
            println!("{:<28} witness graph {:?}", "", underlying_graph(&colourq::gabriel(w)).edges());
        }
    }
}
