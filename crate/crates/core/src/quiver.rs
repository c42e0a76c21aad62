//! Coloured quivers.
//!
//! A coloured quiver on `n` vertices with colour bound `m` assigns to every
//! ordered pair of vertices and every colour `c` in `0..=m` a number of
//! arrows. Quivers coming from `m`-cluster tilting objects satisfy three
//! structural properties, checked by [`validate`]:
//!
//! 1. there are no loops;
//! 2. all arrows from `i` to `j` share a single colour;
//! 3. `r` arrows `i -> j` of colour `c` are matched by `r` arrows `j -> i`
//!    of colour `m - c`.
//!
//! The colour-0 subquiver is the Gabriel quiver, see [`gabriel`].

use std::fmt;

use crate::error::{QuiverError, Result};
use crate::multigraph::DirectedMultigraph;

pub type Vertex = usize;
pub type Colour = usize;

/// A single entry of the multiplicity table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: Vertex,
    pub target: Vertex,
    pub colour: Colour,
    pub mult: u64,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColouredQuiver {
    n: usize,
    m: usize,
    // (source * n + target) * (m + 1) + colour
    mult: Vec<u64>,
}

impl ColouredQuiver {
    /// An arrow-free quiver.
    ///
    /// Panics if `n == 0`; use [`ColouredQuiver::try_new`] for untrusted sizes.
    pub fn new(n: usize, m: usize) -> Self {
        Self::try_new(n, m).expect("quiver must have at least one vertex")
    }

    pub fn try_new(n: usize, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(QuiverError::NoVertices);
        }
        let len = n.checked_mul(n).and_then(|x| x.checked_mul(m.checked_add(1)?)).ok_or(QuiverError::Overflow)?;
        Ok(ColouredQuiver { n, m, mult: vec![0; len] })
    }

    /// Builds a quiver from literal `(source, target, colour, mult)` entries
    /// without adding any reverse arrows. The result is not validated.
    pub fn from_arrows(n: usize, m: usize, arrows: &[(Vertex, Vertex, Colour, u64)]) -> Result<Self> {
        let mut q = Self::try_new(n, m)?;
        for &(i, j, c, r) in arrows {
            q.check_index(i, j, c)?;
            q.add_arrows(i, j, c, r)?;
        }
        Ok(q)
    }

    /// Builds a quiver from one half of each arrow pair: every entry
    /// `(i, j, c, r)` also adds `r` arrows `j -> i` of colour `m - c`.
    pub fn symmetric(n: usize, m: usize, arrows: &[(Vertex, Vertex, Colour, u64)]) -> Result<Self> {
        let mut q = Self::try_new(n, m)?;
        for &(i, j, c, r) in arrows {
            q.check_index(i, j, c)?;
            q.add_arrows(i, j, c, r)?;
            q.add_arrows(j, i, m - c, r)?;
        }
        Ok(q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    fn idx(&self, i: Vertex, j: Vertex, c: Colour) -> usize {
        (i * self.n + j) * (self.m + 1) + c
    }

    fn check_index(&self, i: Vertex, j: Vertex, c: Colour) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(QuiverError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if c > self.m {
            return Err(QuiverError::ColourOutOfRange { colour: c, m: self.m });
        }
        Ok(())
    }

    /// Number of arrows `i -> j` of colour `c`.
    #[inline]
    pub fn mult(&self, i: Vertex, j: Vertex, c: Colour) -> u64 {
        self.mult[self.idx(i, j, c)]
    }

    pub fn set_mult(&mut self, i: Vertex, j: Vertex, c: Colour, r: u64) {
        let idx = self.idx(i, j, c);
        self.mult[idx] = r;
    }

    pub fn add_arrows(&mut self, i: Vertex, j: Vertex, c: Colour, r: u64) -> Result<()> {
        let idx = self.idx(i, j, c);
        self.mult[idx] = self.mult[idx].checked_add(r).ok_or(QuiverError::Overflow)?;
        Ok(())
    }

    /// Multiplicities of all colours on the ordered pair `(i, j)`.
    pub fn pair(&self, i: Vertex, j: Vertex) -> &[u64] {
        let start = self.idx(i, j, 0);
        &self.mult[start..start + self.m + 1]
    }

    pub(crate) fn pair_mut(&mut self, i: Vertex, j: Vertex) -> &mut [u64] {
        let start = self.idx(i, j, 0);
        let width = self.m + 1;
        &mut self.mult[start..start + width]
    }

    /// The colour and multiplicity of the arrows `i -> j`, if any. On quivers
    /// violating the monochromatic property only the lowest colour is
    /// reported.
    pub fn colour_of(&self, i: Vertex, j: Vertex) -> Option<(Colour, u64)> {
        self.pair(i, j).iter().enumerate().find(|(_, &r)| r > 0).map(|(c, &r)| (c, r))
    }

    /// Nonzero entries in row-major `(source, target, colour)` order.
    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        let n = self.n;
        let w = self.m + 1;
        self.mult.iter().enumerate().filter(|(_, &r)| r > 0).map(move |(idx, &r)| Arrow {
            source: idx / w / n,
            target: idx / w % n,
            colour: idx % w,
            mult: r,
        })
    }

    /// Raw multiplicity table in row-major `(source, target, colour)` order.
    pub fn raw(&self) -> &[u64] {
        &self.mult
    }

    /// The quiver with vertex `v` renamed to `image[v]`.
    ///
    /// Panics if `image` is not a permutation of `0..n`.
    pub fn relabel(&self, image: &[Vertex]) -> ColouredQuiver {
        assert_eq!(image.len(), self.n, "permutation has the wrong length");
        let mut seen = vec![false; self.n];
        for &v in image {
            assert!(v < self.n && !seen[v], "not a permutation");
            seen[v] = true;
        }
        let mut out = ColouredQuiver::new(self.n, self.m);
        for i in 0..self.n {
            for j in 0..self.n {
                let src = self.idx(i, j, 0);
                let dst = out.idx(image[i], image[j], 0);
                out.mult[dst..dst + self.m + 1].copy_from_slice(&self.mult[src..src + self.m + 1]);
            }
        }
        out
    }
}

impl fmt::Debug for ColouredQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColouredQuiver(n={}, m={}; ", self.n, self.m)?;
        let mut first = true;
        for a in self.arrows() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}->{}({})", a.source, a.target, a.colour)?;
            if a.mult != 1 {
                write!(f, "x{}", a.mult)?;
            }
        }
        write!(f, ")")
    }
}

/// The three structural properties of coloured quivers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    NoLoops = 1,
    Monochromatic = 2,
    ColourSymmetry = 3,
}

impl Property {
    pub fn number(self) -> u8 {
        self as u8
    }
}

/// A failed structural check at the entry `(source, target, colour)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub property: Property,
    pub source: Vertex,
    pub target: Vertex,
    pub colour: Colour,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.property {
            Property::NoLoops => "loop",
            Property::Monochromatic => "arrows of several colours",
            Property::ColourSymmetry => "missing matching reverse arrows",
        };
        write!(
            f,
            "property ({}) at ({},{},{}): {}",
            self.property.number(),
            self.source,
            self.target,
            self.colour,
            what
        )
    }
}

/// Checks properties (1), (2) and (3). Returns every offending entry.
///
/// For property (2) the reported colour is each colour beyond the lowest one
/// present on the pair.
pub fn validate(q: &ColouredQuiver) -> Vec<Violation> {
    let (n, m) = (q.n(), q.m());
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let pair = q.pair(i, j);
            let mut seen_colour = false;
            for (c, &r) in pair.iter().enumerate() {
                if r == 0 {
                    continue;
                }
                if i == j {
                    out.push(Violation { property: Property::NoLoops, source: i, target: j, colour: c });
                }
                if seen_colour {
                    out.push(Violation { property: Property::Monochromatic, source: i, target: j, colour: c });
                }
                seen_colour = true;
            }
            for (c, &r) in pair.iter().enumerate() {
                if r != q.mult(j, i, m - c) {
                    out.push(Violation { property: Property::ColourSymmetry, source: i, target: j, colour: c });
                }
            }
        }
    }
    out
}

pub fn ensure_valid(q: &ColouredQuiver) -> Result<()> {
    let violations = validate(q);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(QuiverError::Invalid(violations))
    }
}

/// The coloured quiver of an acyclic Gabriel quiver: each arrow `i -> j`
/// becomes colour 0 and gains a reverse arrow `j -> i` of colour `m`.
pub fn from_gabriel(g: &DirectedMultigraph, m: usize) -> Result<ColouredQuiver> {
    if let Some(&v) = g.loops().first() {
        return Err(QuiverError::GabrielLoop(v));
    }
    if !g.is_acyclic() {
        return Err(QuiverError::GabrielCyclic);
    }
    let mut q = ColouredQuiver::try_new(g.n(), m)?;
    for (i, j, r) in g.arrows() {
        q.add_arrows(i, j, 0, r)?;
        q.add_arrows(j, i, m, r)?;
    }
    Ok(q)
}

/// The colour-0 subquiver. May be disconnected and may contain cycles.
pub fn gabriel(q: &ColouredQuiver) -> DirectedMultigraph {
    let mut g = DirectedMultigraph::new(q.n());
    for a in q.arrows().filter(|a| a.colour == 0) {
        g.set_mult(a.source, a.target, a.mult);
    }
    g
}

/// True iff every arrow has colour 0 or `m` and the Gabriel quiver is
/// acyclic.
pub fn is_bicoloured_acyclic(q: &ColouredQuiver) -> bool {
    let m = q.m();
    q.arrows().all(|a| a.colour == 0 || a.colour == m) && gabriel(q).is_acyclic()
}
