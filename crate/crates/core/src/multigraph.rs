use std::collections::VecDeque;

use crate::quiver::Vertex;

/// A directed multigraph without colours, stored as a dense `n x n` table of
/// arrow multiplicities. Used for Gabriel quivers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedMultigraph {
    n: usize,
    mult: Vec<u64>,
}

impl DirectedMultigraph {
    /// Creates a multigraph on `n` vertices with no arrows.
    ///
    /// Panics if `n == 0`.
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "a multigraph needs at least one vertex");
        DirectedMultigraph { n, mult: vec![0; n * n] }
    }

    /// Builds a multigraph from `(source, target, multiplicity)` triples.
    /// Repeated pairs accumulate.
    pub fn from_arrows(n: usize, arrows: &[(Vertex, Vertex, u64)]) -> Self {
        let mut g = DirectedMultigraph::new(n);
        for &(i, j, r) in arrows {
            g.add_arrows(i, j, r);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mult(&self, i: Vertex, j: Vertex) -> u64 {
        self.mult[i * self.n + j]
    }

    pub fn set_mult(&mut self, i: Vertex, j: Vertex, r: u64) {
        self.mult[i * self.n + j] = r;
    }

    pub fn add_arrows(&mut self, i: Vertex, j: Vertex, r: u64) {
        self.mult[i * self.n + j] += r;
    }

    /// Nonzero entries as `(source, target, multiplicity)`, sorted by
    /// `(source, target)`.
    pub fn arrows(&self) -> impl Iterator<Item = (Vertex, Vertex, u64)> + '_ {
        let n = self.n;
        self.mult.iter().enumerate().filter(|(_, &r)| r > 0).map(move |(idx, &r)| (idx / n, idx % n, r))
    }

    pub fn arrow_count(&self) -> u64 {
        self.mult.iter().sum()
    }

    /// Vertices carrying a loop.
    pub fn loops(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&i| self.mult(i, i) > 0).collect()
    }

    /// Kahn's algorithm. Loops count as cycles.
    pub fn is_acyclic(&self) -> bool {
        let n = self.n;
        let mut indeg = vec![0usize; n];
        for (_, j, _) in self.arrows() {
            indeg[j] += 1;
        }
        let mut queue: VecDeque<Vertex> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for (w, d) in indeg.iter_mut().enumerate() {
                if self.mult(v, w) > 0 {
                    *d -= 1;
                    if *d == 0 {
                        queue.push_back(w);
                    }
                }
            }
        }
        seen == n
    }
}
