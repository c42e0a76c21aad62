//! Recognition of Dynkin and extended Dynkin graphs, and the finiteness
//! verdict for mutation classes of coloured quivers.
//!
//! A class is finite iff it contains a quiver with only colours 0 and `m`
//! whose Gabriel quiver is acyclic with Dynkin or extended Dynkin underlying
//! graph, or the quiver has at most two vertices.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{find_bicoloured_acyclic_member, EnumerationConfig};
use crate::error::{QuiverError, Result};
use crate::multigraph::DirectedMultigraph;
use crate::quiver::{ensure_valid, gabriel, ColouredQuiver, Vertex};

/// Undirected multigraph without loops, stored as a symmetric dense table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UndirectedMultigraph {
    n: usize,
    mult: Vec<u64>,
}

impl UndirectedMultigraph {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "a graph needs at least one vertex");
        UndirectedMultigraph { n, mult: vec![0; n * n] }
    }

    /// Panics on loops.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex, u64)]) -> Self {
        let mut g = UndirectedMultigraph::new(n);
        for &(a, b, r) in edges {
            g.add_edges(a, b, r);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_mult(&self, a: Vertex, b: Vertex) -> u64 {
        self.mult[a * self.n + b]
    }

    pub fn add_edges(&mut self, a: Vertex, b: Vertex, r: u64) {
        assert_ne!(a, b, "loops are not allowed");
        self.mult[a * self.n + b] += r;
        self.mult[b * self.n + a] += r;
    }

    /// `(a, b, mult)` with `a < b`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex, u64)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                let r = self.edge_mult(a, b);
                if r > 0 {
                    out.push((a, b, r));
                }
            }
        }
        out
    }

    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&w| self.edge_mult(v, w) > 0)
    }

    /// Number of distinct neighbours.
    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbours(v).count()
    }

    /// Vertex sets of connected components, each sorted, ordered by least
    /// vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for w in self.neighbours(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The subgraph induced on `vertices`, relabeled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> UndirectedMultigraph {
        let mut g = UndirectedMultigraph::new(vertices.len());
        for (x, &a) in vertices.iter().enumerate() {
            for (y, &b) in vertices.iter().enumerate() {
                g.mult[x * g.n + y] = self.edge_mult(a, b);
            }
        }
        g
    }
}

pub fn underlying_graph(g: &DirectedMultigraph) -> UndirectedMultigraph {
    let mut u = UndirectedMultigraph::new(g.n());
    for (i, j, r) in g.arrows() {
        if i != j {
            u.add_edges(i, j, r);
        }
    }
    u
}

/// Simply-laced Dynkin and extended Dynkin types. `ExtendedA(n)`,
/// `ExtendedD(n)` and `ExtendedE(n)` have `n + 1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphClass {
    DynkinA(usize),
    DynkinD(usize),
    DynkinE(usize),
    ExtendedA(usize),
    ExtendedD(usize),
    ExtendedE(usize),
    Other,
}

impl GraphClass {
    pub fn is_dynkin(self) -> bool {
        matches!(self, GraphClass::DynkinA(_) | GraphClass::DynkinD(_) | GraphClass::DynkinE(_))
    }

    pub fn is_extended_dynkin(self) -> bool {
        matches!(self, GraphClass::ExtendedA(_) | GraphClass::ExtendedD(_) | GraphClass::ExtendedE(_))
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::DynkinA(n) => write!(f, "DynkinA({n})"),
            GraphClass::DynkinD(n) => write!(f, "DynkinD({n})"),
            GraphClass::DynkinE(n) => write!(f, "DynkinE({n})"),
            GraphClass::ExtendedA(n) => write!(f, "ExtendedA({n})"),
            GraphClass::ExtendedD(n) => write!(f, "ExtendedD({n})"),
            GraphClass::ExtendedE(n) => write!(f, "ExtendedE({n})"),
            GraphClass::Other => write!(f, "Other"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph is disconnected ({components} components)")]
pub struct DisconnectedGraph {
    pub components: usize,
}

/// Lengths of the paths hanging off branch vertex `centre`, sorted.
/// Only meaningful on trees.
fn arm_lengths(g: &UndirectedMultigraph, centre: Vertex) -> Vec<usize> {
    let mut arms: Vec<usize> = g
        .neighbours(centre)
        .map(|first| {
            let (mut prev, mut cur, mut len) = (centre, first, 1);
            loop {
                if g.degree(cur) != 2 {
                    return len;
                }
                let next = g.neighbours(cur).find(|&w| w != prev).expect("degree 2");
                prev = cur;
                cur = next;
                len += 1;
            }
        })
        .collect();
    arms.sort_unstable();
    arms
}

/// Classifies a connected graph.
pub fn classify_graph(g: &UndirectedMultigraph) -> std::result::Result<GraphClass, DisconnectedGraph> {
    let components = g.components().len();
    if components != 1 {
        return Err(DisconnectedGraph { components });
    }
    let n = g.n();
    let edges = g.edges();
    if edges.iter().any(|&(_, _, r)| r > 1) {
        return Ok(match (n, edges.as_slice()) {
            (2, [(_, _, 2)]) => GraphClass::ExtendedA(1),
            _ => GraphClass::Other,
        });
    }

    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);

    if edges.len() == n {
        // connected and unicyclic: simple cycle iff 2-regular
        return Ok(if n >= 3 && degrees.iter().all(|&d| d == 2) {
            GraphClass::ExtendedA(n - 1)
        } else {
            GraphClass::Other
        });
    }
    if edges.len() != n - 1 {
        return Ok(GraphClass::Other);
    }

    // trees
    if max_degree <= 2 {
        return Ok(GraphClass::DynkinA(n));
    }
    let branches: Vec<Vertex> = (0..n).filter(|&v| degrees[v] >= 3).collect();
    Ok(match branches.as_slice() {
        [c] if degrees[*c] == 3 => match arm_lengths(g, *c).as_slice() {
            [1, 1, _] => GraphClass::DynkinD(n),
            [1, 2, 2] => GraphClass::DynkinE(6),
            [1, 2, 3] => GraphClass::DynkinE(7),
            [1, 2, 4] => GraphClass::DynkinE(8),
            [2, 2, 2] => GraphClass::ExtendedE(6),
            [1, 3, 3] => GraphClass::ExtendedE(7),
            [1, 2, 5] => GraphClass::ExtendedE(8),
            _ => GraphClass::Other,
        },
        [c] if degrees[*c] == 4 && n == 5 => GraphClass::ExtendedD(4),
        [a, b] if degrees[*a] == 3 && degrees[*b] == 3 => {
            // two leaves at each end of a path
            let leaves = |v: Vertex| g.neighbours(v).filter(|&w| degrees[w] == 1).count();
            if leaves(*a) >= 2 && leaves(*b) >= 2 && n >= 6 {
                GraphClass::ExtendedD(n - 1)
            } else {
                GraphClass::Other
            }
        }
        _ => GraphClass::Other,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Finiteness {
    Finite,
    Infinite,
    Unknown,
}

impl fmt::Display for Finiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Finiteness::Finite => "Finite",
            Finiteness::Infinite => "Infinite",
            Finiteness::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessVerdict {
    pub tag: Finiteness,
    pub reason: String,
    /// The bicoloured acyclic class member the verdict was read from.
    pub witness: Option<ColouredQuiver>,
    /// Classes of the witness's components, ordered by least vertex.
    pub components: Vec<GraphClass>,
}

impl fmt::Display for FinitenessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.tag, self.reason)
    }
}

/// Decides whether the mutation class of `q` is finite.
///
/// Quivers on at most two vertices are always finite. Otherwise the class is
/// searched under `cfg` for a bicoloured acyclic member; its Gabriel
/// quiver's components decide the verdict. Components on at most two
/// vertices count as finite. If no such member is found the verdict is
/// `Unknown`.
pub fn predict_finiteness(q: &ColouredQuiver, cfg: &EnumerationConfig) -> Result<FinitenessVerdict> {
    ensure_valid(q)?;
    if q.n() <= 2 {
        return Ok(FinitenessVerdict {
            tag: Finiteness::Finite,
            reason: "at most two vertices".into(),
            witness: None,
            components: Vec::new(),
        });
    }
    let Some(member) = find_bicoloured_acyclic_member(q, cfg)? else {
        return Ok(FinitenessVerdict {
            tag: Finiteness::Unknown,
            reason: "no bicoloured acyclic member found within bounds".into(),
            witness: None,
            components: Vec::new(),
        });
    };
    let graph = underlying_graph(&gabriel(&member));
    let mut classes = Vec::new();
    let mut wild = false;
    for comp in graph.components() {
        let sub = graph.induced(&comp);
        let class = classify_graph(&sub).map_err(|_| QuiverError::GabrielCyclic)?;
        if class == GraphClass::Other && comp.len() > 2 {
            wild = true;
        }
        classes.push(class);
    }
    let names = classes.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    let (tag, reason) = if wild {
        (Finiteness::Infinite, "component Other".to_string())
    } else {
        (Finiteness::Finite, format!("components {names}"))
    };
    Ok(FinitenessVerdict { tag, reason, witness: Some(member), components: classes })
}
