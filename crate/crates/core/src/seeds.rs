//! Standard Dynkin and extended Dynkin diagrams and their acyclic
//! orientations, used to build bicoloured seed quivers.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::dynkin::UndirectedMultigraph;
use crate::error::QuiverError;
use crate::multigraph::DirectedMultigraph;
use crate::quiver::{from_gabriel, ColouredQuiver, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramType {
    A,
    D,
    E,
    ATilde,
    DTilde,
    ETilde,
}

impl FromStr for DiagramType {
    type Err = SeedError;

    fn from_str(s: &str) -> Result<Self, SeedError> {
        Ok(match s {
            "A" => DiagramType::A,
            "D" => DiagramType::D,
            "E" => DiagramType::E,
            "Atilde" => DiagramType::ATilde,
            "Dtilde" => DiagramType::DTilde,
            "Etilde" => DiagramType::ETilde,
            other => return Err(SeedError::UnknownType(other.to_string())),
        })
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagramType::A => "A",
            DiagramType::D => "D",
            DiagramType::E => "E",
            DiagramType::ATilde => "Atilde",
            DiagramType::DTilde => "Dtilde",
            DiagramType::ETilde => "Etilde",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Every edge points from the smaller to the larger label.
    Linear,
    /// Sources and sinks alternate; needs a bipartite diagram.
    Alternating,
    /// One `(from, to)` per edge of the diagram.
    Explicit(Vec<(Vertex, Vertex)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error("unknown diagram type {0:?} (expected A, D, E, Atilde, Dtilde or Etilde)")]
    UnknownType(String),
    #[error("rank {rank} is not valid for type {ty}")]
    BadRank { ty: DiagramType, rank: usize },
    #[error("diagram {0} is not bipartite, no alternating orientation")]
    NotBipartite(String),
    #[error("arrow {0} -> {1} is not an edge of the diagram")]
    NotAnEdge(Vertex, Vertex),
    #[error("edge {{{0}, {1}}} oriented {2} times, expected {3}")]
    EdgeCount(Vertex, Vertex, u64, u64),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// A diagram type with its rank. Extended types of rank `n` have `n + 1`
/// vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub ty: DiagramType,
    pub rank: usize,
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.ty, self.rank)
    }
}

fn path_edges(range: std::ops::Range<usize>) -> impl Iterator<Item = (Vertex, Vertex)> {
    range.clone().zip(range.skip(1))
}

impl Diagram {
    pub fn new(ty: DiagramType, rank: usize) -> Result<Self, SeedError> {
        let ok = match ty {
            DiagramType::A => rank >= 1,
            DiagramType::D => rank >= 4,
            DiagramType::E => (6..=8).contains(&rank),
            DiagramType::ATilde => rank >= 1,
            DiagramType::DTilde => rank >= 4,
            DiagramType::ETilde => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Diagram { ty, rank })
        } else {
            Err(SeedError::BadRank { ty, rank })
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self.ty {
            DiagramType::A | DiagramType::D | DiagramType::E => self.rank,
            _ => self.rank + 1,
        }
    }

    /// Edges as `(a, b)` with `a < b`; a double edge appears twice.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.rank;
        let mut e: Vec<(Vertex, Vertex)> = match self.ty {
            DiagramType::A => path_edges(0..n).collect(),
            DiagramType::D => path_edges(0..n - 1).chain([(n - 3, n - 1)]).collect(),
            DiagramType::E => path_edges(0..n - 1).chain([(2, n - 1)]).collect(),
            DiagramType::ATilde => path_edges(0..n + 1).chain([(0, n)]).collect(),
            DiagramType::DTilde => path_edges(1..n).chain([(0, 2), (n - 2, n)]).collect(),
            DiagramType::ETilde => match n {
                6 => vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
                7 => path_edges(0..7).chain([(3, 7)]).collect(),
                _ => path_edges(0..8).chain([(2, 8)]).collect(),
            },
        };
        for edge in &mut e {
            if edge.0 > edge.1 {
                *edge = (edge.1, edge.0);
            }
        }
        e.sort_unstable();
        e
    }

    pub fn graph(&self) -> UndirectedMultigraph {
        let mut g = UndirectedMultigraph::new(self.vertex_count());
        for (a, b) in self.edges() {
            g.add_edges(a, b, 1);
        }
        g
    }

    /// The Gabriel quiver of an acyclic orientation.
    pub fn orient(&self, orientation: &Orientation) -> Result<DirectedMultigraph, SeedError> {
        let n = self.vertex_count();
        let edges = self.edges();
        let mut g = DirectedMultigraph::new(n);
        match orientation {
            Orientation::Linear => {
                for (a, b) in edges {
                    g.add_arrows(a, b, 1);
                }
            }
            Orientation::Alternating => {
                let side = two_colouring(&self.graph()).ok_or_else(|| SeedError::NotBipartite(self.to_string()))?;
                for (a, b) in edges {
                    if side[a] == 0 {
                        g.add_arrows(a, b, 1);
                    } else {
                        g.add_arrows(b, a, 1);
                    }
                }
            }
            Orientation::Explicit(arrows) => {
                let graph = self.graph();
                let mut used = UndirectedMultigraph::new(n);
                for &(a, b) in arrows {
                    if a >= n || b >= n || a == b || graph.edge_mult(a, b) == 0 {
                        return Err(SeedError::NotAnEdge(a, b));
                    }
                    used.add_edges(a, b, 1);
                    g.add_arrows(a, b, 1);
                }
                for (a, b, want) in graph.edges() {
                    let got = used.edge_mult(a, b);
                    if got != want {
                        return Err(SeedError::EdgeCount(a, b, got, want));
                    }
                }
            }
        }
        Ok(g)
    }

    /// `from_gabriel` of the chosen orientation.
    pub fn seed(&self, orientation: &Orientation, m: usize) -> Result<ColouredQuiver, SeedError> {
        Ok(from_gabriel(&self.orient(orientation)?, m)?)
    }
}

fn two_colouring(g: &UndirectedMultigraph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in g.neighbours(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// Every acyclic orientation of `g`, with each multi-edge oriented as a
/// block. There are at most `2^edges` candidates, so keep `g` small.
pub fn acyclic_orientations(g: &UndirectedMultigraph) -> Vec<DirectedMultigraph> {
    let edges = g.edges();
    assert!(edges.len() < 24, "too many edges to enumerate orientations");
    let mut out = Vec::new();
    for mask in 0u32..(1 << edges.len()) {
        let mut d = DirectedMultigraph::new(g.n());
        for (bit, &(a, b, r)) in edges.iter().enumerate() {
            if mask >> bit & 1 == 0 {
                d.add_arrows(a, b, r);
            } else {
                d.add_arrows(b, a, r);
            }
        }
        if d.is_acyclic() {
            out.push(d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{classify_graph, GraphClass};

    #[test]
    fn diagrams_classify_as_themselves() {
        let cases = [
            (DiagramType::A, 1, GraphClass::DynkinA(1)),
            (DiagramType::A, 5, GraphClass::DynkinA(5)),
            (DiagramType::D, 4, GraphClass::DynkinD(4)),
            (DiagramType::D, 7, GraphClass::DynkinD(7)),
            (DiagramType::E, 6, GraphClass::DynkinE(6)),
            (DiagramType::E, 7, GraphClass::DynkinE(7)),
            (DiagramType::E, 8, GraphClass::DynkinE(8)),
            (DiagramType::ATilde, 1, GraphClass::ExtendedA(1)),
            (DiagramType::ATilde, 2, GraphClass::ExtendedA(2)),
            (DiagramType::ATilde, 5, GraphClass::ExtendedA(5)),
            (DiagramType::DTilde, 4, GraphClass::ExtendedD(4)),
            (DiagramType::DTilde, 6, GraphClass::ExtendedD(6)),
            (DiagramType::ETilde, 6, GraphClass::ExtendedE(6)),
            (DiagramType::ETilde, 7, GraphClass::ExtendedE(7)),
            (DiagramType::ETilde, 8, GraphClass::ExtendedE(8)),
        ];
        for (ty, rank, class) in cases {
            let d = Diagram::new(ty, rank).unwrap();
            assert_eq!(classify_graph(&d.graph()), Ok(class), "{d}");
        }
    }

    #[test]
    fn bad_ranks() {
        assert!(Diagram::new(DiagramType::D, 3).is_err());
        assert!(Diagram::new(DiagramType::E, 9).is_err());
        assert!(Diagram::new(DiagramType::A, 0).is_err());
        assert_eq!("Q".parse::<DiagramType>(), Err(SeedError::UnknownType("Q".into())));
    }

    #[test]
    fn orientations() {
        let a3 = Diagram::new(DiagramType::A, 3).unwrap();
        let lin = a3.orient(&Orientation::Linear).unwrap();
        assert_eq!(lin, DirectedMultigraph::from_arrows(3, &[(0, 1, 1), (1, 2, 1)]));
        let alt = a3.orient(&Orientation::Alternating).unwrap();
        assert_eq!(alt, DirectedMultigraph::from_arrows(3, &[(0, 1, 1), (2, 1, 1)]));
        let exp = a3.orient(&Orientation::Explicit(vec![(1, 0), (1, 2)])).unwrap();
        assert_eq!(exp, DirectedMultigraph::from_arrows(3, &[(1, 0, 1), (1, 2, 1)]));
        assert_eq!(a3.orient(&Orientation::Explicit(vec![(0, 2), (1, 2)])), Err(SeedError::NotAnEdge(0, 2)));
        assert!(a3.orient(&Orientation::Explicit(vec![(0, 1)])).is_err());
    }

    #[test]
    fn odd_cycle_has_no_alternating_orientation() {
        let t = Diagram::new(DiagramType::ATilde, 2).unwrap();
        assert!(matches!(t.orient(&Orientation::Alternating), Err(SeedError::NotBipartite(_))));
        // the linear orientation of a cycle is acyclic
        assert!(t.orient(&Orientation::Linear).unwrap().is_acyclic());
    }

    #[test]
    fn kronecker_seed() {
        let k = Diagram::new(DiagramType::ATilde, 1).unwrap();
        let q = k.seed(&Orientation::Linear, 1).unwrap();
        assert_eq!(q.mult(0, 1, 0), 2);
        assert_eq!(q.mult(1, 0, 1), 2);
    }

    #[test]
    fn orientation_counts() {
        // a tree with e edges has 2^e acyclic orientations; a cycle of length k has 2^k - 2
        assert_eq!(acyclic_orientations(&Diagram::new(DiagramType::D, 4).unwrap().graph()).len(), 8);
        assert_eq!(acyclic_orientations(&Diagram::new(DiagramType::ATilde, 3).unwrap().graph()).len(), 14);
    }
}
