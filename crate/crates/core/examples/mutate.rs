//! Mutate a seed at one vertex and walk back around the period.
//!
//! ```text
//! cargo run --example mutate
//! ```

use colourq::{emit_quiver, from_gabriel, gabriel, mutate, mutate_seq, validate, DirectedMultigraph};

fn main() {
    // linear A3, m = 2
    let seed = from_gabriel(&DirectedMultigraph::from_arrows(3, &[(0, 1, 1), (1, 2, 1)]), 2).unwrap();
    println!("seed      {}", emit_quiver(&seed));

    let mut q = seed.clone();
    for step in 1..=3 {
        q = mutate(&q, 0).unwrap();
        assert!(validate(&q).is_empty());
        println!("mu_0^{step}    {}", emit_quiver(&q));
    }
    assert_eq!(q, seed, "m + 1 mutations at one vertex are the identity");

    let walk = [1, 2, 0, 1];
    let end = mutate_seq(&seed, &walk).unwrap();
    println!("walk {walk:?} -> {}", emit_quiver(&end));
    println!("gabriel quiver: {:?}", gabriel(&end).arrows().collect::<Vec<_>>());

    match mutate(&seed, 7) {
        Err(e) => println!("mutating at 7: {e}"),
        Ok(_) => unreachable!(),
    }
}
