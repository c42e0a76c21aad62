use thiserror::Error;

use crate::quiver::{Colour, Vertex, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("quiver must have at least one vertex")]
    NoVertices,

    #[error("vertex {vertex} out of range for a quiver with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("colour {colour} out of range for m = {m}")]
    ColourOutOfRange { colour: Colour, m: usize },

    #[error("invalid coloured quiver: {}", join(.0))]
    Invalid(Vec<Violation>),

    #[error("gabriel quiver has a loop at vertex {0}")]
    GabrielLoop(Vertex),

    #[error("gabriel quiver has an oriented cycle")]
    GabrielCyclic,

    #[error("arrow multiplicity overflow")]
    Overflow,

    #[error("mixed colours survive cancellation on arrows {from} -> {to}")]
    MixedColours { from: Vertex, to: Vertex },

    #[error("mutation at vertex {vertex} produced an invalid quiver: {}", join(.violations))]
    PostMutation { vertex: Vertex, violations: Vec<Violation> },

    #[error("mutation sequence failed at position {position}: {source}")]
    Sequence {
        position: usize,
        #[source]
        source: Box<QuiverError>,
    },

    #[error("size mismatch: expected {expected} vertices, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
}

fn join(violations: &[Violation]) -> String {
    violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = QuiverError> = std::result::Result<T, E>;
