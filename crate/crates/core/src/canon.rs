//! Canonical forms of coloured quivers up to vertex relabeling.
//!
//! Vertices are first split by an equitable partition refinement on
//! per-colour in/out multiplicities. Remaining ties are broken by
//! individualizing vertices one at a time and keeping the leaf whose
//! serialization is lexicographically least. Colours and arrow directions are
//! never permuted.

use std::fmt;

use crate::quiver::{ColouredQuiver, Vertex};

/// Byte serialization of a quiver under its canonical vertex order:
/// `m`, `n`, then every multiplicity in row-major `(source, target, colour)`
/// order, each as an unsigned LEB128 varint.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, hex::FromHexError> {
        hex::decode(s).map(CanonicalForm)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// `image[v]` is the new label of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPermutation(Vec<Vertex>);

impl VertexPermutation {
    pub fn identity(n: usize) -> Self {
        VertexPermutation((0..n).collect())
    }

    /// Returns `None` unless `image` is a permutation of `0..image.len()`.
    pub fn new(image: Vec<Vertex>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(VertexPermutation(image))
    }

    pub fn image(&self) -> &[Vertex] {
        &self.0
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.0[v]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        VertexPermutation(inv)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &VertexPermutation) -> Self {
        VertexPermutation(first.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn relabel(&self, q: &ColouredQuiver) -> ColouredQuiver {
        q.relabel(&self.0)
    }
}

pub(crate) fn push_varint(out: &mut Vec<u8>, mut x: u64) {
    loop {
        let byte = (x & 0x7f) as u8;
        x >>= 7;
        if x == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

/// Serializes `q` in its current labeling.
pub fn serialize(q: &ColouredQuiver) -> Vec<u8> {
    let mut out = Vec::with_capacity(q.raw().len() + 4);
    push_varint(&mut out, q.m() as u64);
    push_varint(&mut out, q.n() as u64);
    for &r in q.raw() {
        push_varint(&mut out, r);
    }
    out
}

fn serialize_in_order(q: &ColouredQuiver, order: &[Vertex]) -> Vec<u8> {
    let mut out = Vec::with_capacity(q.raw().len() + 4);
    push_varint(&mut out, q.m() as u64);
    push_varint(&mut out, q.n() as u64);
    for &i in order {
        for &j in order {
            for &r in q.pair(i, j) {
                push_varint(&mut out, r);
            }
        }
    }
    out
}

type Partition = Vec<Vec<Vertex>>;

// Per-cell sorted lists of outgoing and incoming colour vectors.
type Signature<'a> = Vec<(Vec<&'a [u64]>, Vec<&'a [u64]>)>;

fn signature<'a>(q: &'a ColouredQuiver, v: Vertex, cells: &Partition) -> Signature<'a> {
    cells
        .iter()
        .map(|cell| {
            let mut outs: Vec<&[u64]> = cell.iter().map(|&u| q.pair(v, u)).collect();
            let mut ins: Vec<&[u64]> = cell.iter().map(|&u| q.pair(u, v)).collect();
            outs.sort_unstable();
            ins.sort_unstable();
            (outs, ins)
        })
        .collect()
}

fn refine(q: &ColouredQuiver, mut cells: Partition) -> Partition {
    loop {
        let before = cells.len();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Signature<'_>, Vertex)> = cell.iter().map(|&v| (signature(q, v, &cells), v)).collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            let mut start = 0;
            for idx in 1..=keyed.len() {
                if idx == keyed.len() || keyed[idx].0 != keyed[start].0 {
                    next.push(keyed[start..idx].iter().map(|(_, v)| *v).collect());
                    start = idx;
                }
            }
        }
        cells = next;
        if cells.len() == before {
            return cells;
        }
    }
}

struct Search<'a> {
    q: &'a ColouredQuiver,
    best: Option<(Vec<u8>, Vec<Vertex>)>,
}

impl Search<'_> {
    fn run(&mut self, cells: Partition) {
        let cells = refine(self.q, cells);
        let target =
            cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(_, c)| c.len()).map(|(idx, _)| idx);
        let Some(t) = target else {
            let order: Vec<Vertex> = cells.into_iter().map(|c| c[0]).collect();
            let bytes = serialize_in_order(self.q, &order);
            if self.best.as_ref().is_none_or(|(b, _)| bytes < *b) {
                self.best = Some((bytes, order));
            }
            return;
        };
        for &v in &cells[t] {
            let mut branch = Vec::with_capacity(cells.len() + 1);
            branch.extend_from_slice(&cells[..t]);
            branch.push(vec![v]);
            branch.push(cells[t].iter().copied().filter(|&u| u != v).collect());
            branch.extend_from_slice(&cells[t + 1..]);
            self.run(branch);
        }
    }
}

fn canonical_order(q: &ColouredQuiver) -> (Vec<u8>, Vec<Vertex>) {
    let mut search = Search { q, best: None };
    search.run(vec![(0..q.n()).collect()]);
    search.best.expect("search visits at least one leaf")
}

/// The canonical form of `q`. Two quivers have equal forms iff they are
/// isomorphic.
pub fn canonical_form(q: &ColouredQuiver) -> CanonicalForm {
    CanonicalForm(canonical_order(q).0)
}

/// A relabeling taking `q` to its canonical labeling.
pub fn canonical_permutation(q: &ColouredQuiver) -> VertexPermutation {
    let (_, order) = canonical_order(q);
    let mut image = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        image[v] = pos;
    }
    VertexPermutation(image)
}

/// Canonical form together with the permutation that produces it.
pub fn canonicalize(q: &ColouredQuiver) -> (CanonicalForm, VertexPermutation) {
    let (bytes, order) = canonical_order(q);
    let mut image = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        image[v] = pos;
    }
    (CanonicalForm(bytes), VertexPermutation(image))
}

pub fn are_isomorphic(a: &ColouredQuiver, b: &ColouredQuiver) -> bool {
    a.m() == b.m() && a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, m: usize, half: &[(usize, usize, usize, u64)]) -> ColouredQuiver {
        ColouredQuiver::symmetric(n, m, half).unwrap()
    }

    #[test]
    fn varint_encoding() {
        let mut out = Vec::new();
        push_varint(&mut out, 0);
        push_varint(&mut out, 127);
        push_varint(&mut out, 128);
        push_varint(&mut out, 300);
        assert_eq!(out, vec![0x00, 0x7f, 0x80, 0x01, 0xac, 0x02]);
    }

    #[test]
    fn two_vertex_swap() {
        let a = q(2, 2, &[(0, 1, 0, 1)]);
        let b = q(2, 2, &[(0, 1, 2, 1)]);
        let c = q(2, 2, &[(0, 1, 1, 1)]);
        assert!(are_isomorphic(&a, &b));
        assert!(!are_isomorphic(&a, &c));
    }

    #[test]
    fn different_m_never_isomorphic() {
        assert!(!are_isomorphic(&ColouredQuiver::new(2, 1), &ColouredQuiver::new(2, 2)));
        assert!(!are_isomorphic(&ColouredQuiver::new(2, 1), &ColouredQuiver::new(3, 1)));
    }

    #[test]
    fn permutation_reproduces_form() {
        let x = q(4, 2, &[(0, 1, 1, 1), (1, 2, 0, 2), (3, 1, 0, 1)]);
        let (form, perm) = canonicalize(&x);
        assert_eq!(serialize(&perm.relabel(&x)), form.as_bytes());
        assert_eq!(canonical_permutation(&x), perm);
    }

    #[test]
    fn canonical_quiver_has_identity_permutation() {
        let x = q(4, 2, &[(0, 1, 1, 1), (1, 2, 0, 2), (3, 1, 0, 1)]);
        let canon = canonical_permutation(&x).relabel(&x);
        // an asymmetric quiver: the canonical labeling is unique
        assert!(canonical_permutation(&canon).is_identity());
    }

    #[test]
    fn permutation_helpers() {
        let p = VertexPermutation::new(vec![2, 0, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.apply(0), 2);
        assert!(VertexPermutation::new(vec![0, 0]).is_none());
        assert!(VertexPermutation::new(vec![0, 2]).is_none());
    }

    #[test]
    fn hex_round_trip() {
        let f = canonical_form(&q(3, 1, &[(0, 1, 0, 1)]));
        assert_eq!(CanonicalForm::from_hex(&f.to_hex()).unwrap(), f);
    }
}
