//! Coloured quiver mutation.
//!
//! Mutation at `j` runs in three steps:
//!
//! 1. for every pair of arrows `i -> j` of colour `c` and `j -> k` of colour
//!    0 with `i != k`, add an arrow `i -> k` of colour `c` and an arrow
//!    `k -> i` of colour `m - c`. All additions are read off the input quiver.
//! 2. on every ordered pair, cancel equal numbers of arrows of different
//!    colours until at most one colour remains.
//! 3. add one (mod `m + 1`) to the colour of every arrow into `j` and
//!    subtract one from the colour of every arrow out of `j`.

use crate::error::{QuiverError, Result};
use crate::quiver::{ensure_valid, validate, ColouredQuiver, Vertex};

/// Mutates `q` at vertex `j`.
///
/// The input must satisfy the three structural properties. The result is
/// validated before being returned.
pub fn mutate(q: &ColouredQuiver, j: Vertex) -> Result<ColouredQuiver> {
    let n = q.n();
    if j >= n {
        return Err(QuiverError::VertexOutOfRange { vertex: j, n });
    }
    ensure_valid(q)?;
    let out = mutate_unchecked(q, j)?;
    let violations = validate(&out);
    if !violations.is_empty() {
        return Err(QuiverError::PostMutation { vertex: j, violations });
    }
    Ok(out)
}

/// Runs the three steps without validating input or output. Step 2 still
/// reports pairs that keep more than one colour.
pub(crate) fn mutate_unchecked(q: &ColouredQuiver, j: Vertex) -> Result<ColouredQuiver> {
    let (n, m) = (q.n(), q.m());
    let mut out = q.clone();

    // step 1
    for k in (0..n).filter(|&k| k != j) {
        let through = q.mult(j, k, 0);
        if through == 0 {
            continue;
        }
        for i in (0..n).filter(|&i| i != j && i != k) {
            for c in 0..=m {
                let r = q.mult(i, j, c);
                if r == 0 {
                    continue;
                }
                let added = r.checked_mul(through).ok_or(QuiverError::Overflow)?;
                out.add_arrows(i, k, c, added)?;
                out.add_arrows(k, i, m - c, added)?;
            }
        }
    }

    // step 2
    for i in 0..n {
        for k in 0..n {
            cancel_mixed(out.pair_mut(i, k));
            if out.pair(i, k).iter().filter(|&&r| r > 0).count() > 1 {
                return Err(QuiverError::MixedColours { from: i, to: k });
            }
        }
    }

    // step 3
    for i in (0..n).filter(|&i| i != j) {
        out.pair_mut(i, j).rotate_right(1);
        out.pair_mut(j, i).rotate_left(1);
    }
    Ok(out)
}

/// Cancels the pairwise minimum over distinct-colour pairs, taking colour
/// pairs in ascending lexicographic order, until one colour is left.
fn cancel_mixed(pair: &mut [u64]) {
    loop {
        let mut changed = false;
        'scan: for a in 0..pair.len() {
            if pair[a] == 0 {
                continue;
            }
            for b in a + 1..pair.len() {
                if pair[b] > 0 {
                    let d = pair[a].min(pair[b]);
                    pair[a] -= d;
                    pair[b] -= d;
                    changed = true;
                    break 'scan;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// Mutates at each vertex of `js` in turn.
pub fn mutate_seq(q: &ColouredQuiver, js: &[Vertex]) -> Result<ColouredQuiver> {
    let mut cur = q.clone();
    for (position, &j) in js.iter().enumerate() {
        cur = mutate(&cur, j).map_err(|e| QuiverError::Sequence { position, source: Box::new(e) })?;
    }
    Ok(cur)
}
