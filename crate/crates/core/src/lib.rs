//! Coloured quiver mutation for `m`-cluster combinatorics.
//!
//! Build a seed from an acyclic quiver, mutate it, enumerate its mutation
//! class up to isomorphism, and decide whether that class is finite:
//!
//! ```
//! use colourq::{enumerate, from_gabriel, mutate, predict_finiteness, DirectedMultigraph, EnumerationConfig, Finiteness};
//!
//! let a3 = DirectedMultigraph::from_arrows(3, &[(0, 1, 1), (1, 2, 1)]);
//! let seed = from_gabriel(&a3, 2).unwrap();
//! let once = mutate(&seed, 0).unwrap();
//! assert_eq!(once.mult(0, 1, 2), 1);
//!
//! let class = enumerate(&seed, &EnumerationConfig::with_max(1000)).unwrap();
//! assert_eq!(class.size(), 7);
//!
//! let verdict = predict_finiteness(&seed, &EnumerationConfig::default()).unwrap();
//! assert_eq!(verdict.tag, Finiteness::Finite);
//! ```

pub mod canon;
pub mod cli;
pub mod document;
pub mod dynkin;
pub mod enumerate;
pub mod error;
pub mod multigraph;
pub mod mutation;
pub mod quiver;
pub mod seeds;
pub mod service;

pub use canon::{
    are_isomorphic, canonical_form, canonical_permutation, canonicalize, CanonicalForm, VertexPermutation,
};
pub use document::{emit_quiver, parse_quiver, QuiverDocument};
pub use dynkin::{
    classify_graph, predict_finiteness, underlying_graph, Finiteness, FinitenessVerdict, GraphClass,
    UndirectedMultigraph,
};
pub use enumerate::{
    enumerate, find_bicoloured_acyclic_member, EnumerationConfig, EnumerationResult, Representative, Status,
};
pub use error::QuiverError;
pub use multigraph::DirectedMultigraph;
pub use mutation::{mutate, mutate_seq};
pub use quiver::{
    from_gabriel, gabriel, is_bicoloured_acyclic, validate, Arrow, Colour, ColouredQuiver, Property, Vertex, Violation,
};
pub use seeds::{Diagram, DiagramType, Orientation};
