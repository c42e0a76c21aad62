//! Test oracles kept independent of the library's mutation and
//! canonicalization code paths.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

use colourq::{ColouredQuiver, DirectedMultigraph};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture(name: &str) -> Vec<u8> {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// `(i, j, c, r)` entries plus their colour-symmetric partners.
pub fn sym(n: usize, m: usize, half: &[(usize, usize, usize, u64)]) -> ColouredQuiver {
    let mut q = ColouredQuiver::new(n, m);
    for &(i, j, c, r) in half {
        q.set_mult(i, j, c, r);
        q.set_mult(j, i, m - c, r);
    }
    q
}

/// The seven quivers commonly listed for the A3, m = 2 class, on vertices
/// 0, 1, 2. The last one lies in the extended A2 class instead; the true
/// seventh member is [`a3_triangle`].
pub fn listed_a3_class() -> Vec<ColouredQuiver> {
    vec![
        sym(3, 2, &[(0, 1, 0, 1), (1, 2, 0, 1)]),
        sym(3, 2, &[(0, 1, 2, 1), (1, 2, 0, 1)]),
        sym(3, 2, &[(0, 1, 1, 1), (1, 2, 0, 1)]),
        sym(3, 2, &[(0, 1, 0, 1), (1, 2, 1, 1)]),
        sym(3, 2, &[(0, 1, 0, 1), (1, 2, 2, 1)]),
        sym(3, 2, &[(0, 1, 1, 1), (1, 2, 1, 1)]),
        sym(3, 2, &[(0, 1, 1, 1), (1, 2, 1, 1), (0, 2, 0, 1)]),
    ]
}

/// The triangle reached from the third listed quiver by mutating at its
/// middle vertex, worked by hand from the three-step rule.
pub fn a3_triangle() -> ColouredQuiver {
    sym(3, 2, &[(0, 1, 2, 1), (2, 1, 0, 1), (0, 2, 1, 1)])
}

// ---------------------------------------------------------------------------
// Fomin-Zelevinsky matrix mutation

pub type Exchange = Vec<Vec<i64>>;

pub fn exchange_matrix(g: &DirectedMultigraph) -> Exchange {
    let n = g.n();
    (0..n).map(|i| (0..n).map(|j| g.mult(i, j) as i64 - g.mult(j, i) as i64).collect()).collect()
}

pub fn fz_mutate(b: &Exchange, k: usize) -> Exchange {
    let n = b.len();
    let mut out = b.clone();
    for i in 0..n {
        for j in 0..n {
            out[i][j] =
                if i == k || j == k { -b[i][j] } else { b[i][j] + b[i][k].signum() * (b[i][k] * b[k][j]).max(0) };
        }
    }
    out
}

pub fn quiver_of(b: &Exchange) -> DirectedMultigraph {
    let n = b.len();
    let mut g = DirectedMultigraph::new(n);
    for (i, row) in b.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x > 0 {
                g.set_mult(i, j, x as u64);
            }
        }
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every permutation `p` of `0..n` as an image vector.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}

fn exchange_key(b: &Exchange) -> Vec<i64> {
    let n = b.len();
    permutations(n)
        .into_iter()
        .map(|p| {
            // p[pos] = old vertex placed at position pos
            let mut key = Vec::with_capacity(n * n);
            for &i in &p {
                for &j in &p {
                    key.push(b[i][j]);
                }
            }
            key
        })
        .min()
        .unwrap()
}

/// Size of the FZ mutation class of `b` up to simultaneous row/column
/// permutation, or `None` past `cap`.
pub fn fz_class_size(b: &Exchange, cap: usize) -> Option<usize> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(exchange_key(b));
    queue.push_back(b.clone());
    while let Some(cur) = queue.pop_front() {
        for k in 0..cur.len() {
            let next = fz_mutate(&cur, k);
            if seen.insert(exchange_key(&next)) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(next);
            }
        }
    }
    Some(seen.len())
}

// ---------------------------------------------------------------------------
// Brute-force isomorphism of coloured quivers

pub fn brute_isomorphic(a: &ColouredQuiver, b: &ColouredQuiver) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let (n, m) = (a.n(), a.m());
    permutations(n)
        .into_iter()
        .any(|p| (0..n).all(|i| (0..n).all(|j| (0..=m).all(|c| a.mult(i, j, c) == b.mult(p[i], p[j], c)))))
}

/// Lexicographically least flattened table over all relabelings.
pub fn brute_key(q: &ColouredQuiver) -> Vec<u64> {
    let (n, m) = (q.n(), q.m());
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut key = vec![m as u64, n as u64];
            for &i in &p {
                for &j in &p {
                    for c in 0..=m {
                        key.push(q.mult(i, j, c));
                    }
                }
            }
            key
        })
        .min()
        .unwrap()
}

// ---------------------------------------------------------------------------
// Naive coloured mutation on a sparse map, written directly from the rule

type Sparse = BTreeMap<(usize, usize), (usize, u64)>;

fn to_sparse(q: &ColouredQuiver) -> Sparse {
    let mut s = Sparse::new();
    for i in 0..q.n() {
        for j in 0..q.n() {
            for c in 0..=q.m() {
                let r = q.mult(i, j, c);
                if r > 0 {
                    assert!(s.insert((i, j), (c, r)).is_none(), "mixed colours");
                }
            }
        }
    }
    s
}

pub fn naive_mutate(q: &ColouredQuiver, j: usize) -> ColouredQuiver {
    let (n, m) = (q.n(), q.m());
    let s = to_sparse(q);
    // multiset of arrows per ordered pair: colour -> count
    let mut work: BTreeMap<(usize, usize), BTreeMap<usize, u64>> = BTreeMap::new();
    for (&(a, b), &(c, r)) in &s {
        *work.entry((a, b)).or_default().entry(c).or_default() += r;
    }
    for (&(i, jj), &(c, r1)) in &s {
        if jj != j {
            continue;
        }
        for (&(jj2, k), &(c2, r2)) in &s {
            if jj2 != j || c2 != 0 || k == i {
                continue;
            }
            *work.entry((i, k)).or_default().entry(c).or_default() += r1 * r2;
            *work.entry((k, i)).or_default().entry(m - c).or_default() += r1 * r2;
        }
    }
    let mut out = ColouredQuiver::new(n, m);
    for ((a, b), colours) in work {
        let mut live: Vec<(usize, u64)> = colours.into_iter().filter(|&(_, r)| r > 0).collect();
        while live.len() > 1 {
            let d = live[0].1.min(live[1].1);
            live[0].1 -= d;
            live[1].1 -= d;
            live.retain(|&(_, r)| r > 0);
        }
        if let Some(&(mut c, r)) = live.first() {
            if b == j {
                c = (c + 1) % (m + 1);
            } else if a == j {
                c = (c + m) % (m + 1);
            }
            out.set_mult(a, b, c, r);
        }
    }
    out
}

/// Class size by BFS over [`naive_mutate`] deduplicated with [`brute_key`].
pub fn naive_class_size(seed: &ColouredQuiver, cap: usize) -> Option<usize> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(brute_key(seed));
    queue.push_back(seed.clone());
    while let Some(cur) = queue.pop_front() {
        for j in 0..cur.n() {
            let next = naive_mutate(&cur, j);
            if seen.insert(brute_key(&next)) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(next);
            }
        }
    }
    Some(seen.len())
}

// ---------------------------------------------------------------------------
// Random inputs

/// A random acyclic multigraph on `n` vertices: arrows only go from lower to
/// higher position in a random vertex order.
pub fn random_acyclic<R: Rng>(rng: &mut R, n: usize, max_mult: u64, density: f64) -> DirectedMultigraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = DirectedMultigraph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                g.set_mult(order[a], order[b], rng.gen_range(1..=max_mult));
            }
        }
    }
    g
}

/// A random quiver satisfying the three properties (not necessarily in any
/// mutation class).
pub fn random_valid<R: Rng>(rng: &mut R, n: usize, m: usize) -> ColouredQuiver {
    let mut q = ColouredQuiver::new(n, m);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.6) {
                let c = rng.gen_range(0..=m);
                let r = rng.gen_range(1..=2);
                q.set_mult(i, j, c, r);
                q.set_mult(j, i, m - c, r);
            }
        }
    }
    q
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
