//! Canonical forms identify quivers up to relabeling.
//!
//! ```text
//! cargo run --example canonical_forms
//! ```

use colourq::{are_isomorphic, canonicalize, ColouredQuiver};

fn main() {
    let q = ColouredQuiver::symmetric(4, 2, &[(0, 1, 0, 1), (1, 2, 1, 2), (2, 3, 0, 1), (3, 0, 2, 1)]).unwrap();
    let shuffled = q.relabel(&[2, 0, 3, 1]);
    let (form, perm) = canonicalize(&q);
    let (form2, perm2) = canonicalize(&shuffled);

    println!("form            {form}");
    println!("shuffled form   {form2}");
    println!("labelings       {:?} and {:?}", perm.image(), perm2.image());
    assert_eq!(form, form2);
    assert_eq!(perm.relabel(&q), perm2.relabel(&shuffled));

    let mut other = q.clone();
    other.set_mult(1, 2, 1, 1);
    other.set_mult(2, 1, 1, 1);
    println!("changing one multiplicity: isomorphic = {}", are_isomorphic(&q, &other));
}
