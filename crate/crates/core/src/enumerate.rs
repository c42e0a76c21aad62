//! Breadth-first enumeration of mutation classes up to isomorphism.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{QuiverError, Result};
use crate::mutation::mutate;
use crate::quiver::{ensure_valid, is_bicoloured_acyclic, ColouredQuiver};

pub const DEFAULT_MAX_QUIVERS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Abort once this many distinct quivers are known and another is found.
    pub max_quivers: usize,
    /// Do not expand quivers at this BFS distance from the seed.
    pub max_depth: Option<usize>,
    /// Wall-clock budget; running out reports `BoundExceeded`.
    pub time_budget: Option<Duration>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { max_quivers: DEFAULT_MAX_QUIVERS, max_depth: None, time_budget: None }
    }
}

impl EnumerationConfig {
    /// Panics if `max_quivers == 0`.
    pub fn with_max(max_quivers: usize) -> Self {
        assert!(max_quivers >= 1, "max_quivers must be positive");
        EnumerationConfig { max_quivers, ..Default::default() }
    }

    pub fn depth(mut self, max_depth: usize) -> Self {
        self.max_depth = Some(max_depth);
        self
    }

    pub fn time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Status {
    Complete,
    BoundExceeded,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Complete => "Complete",
            Status::BoundExceeded => "BoundExceeded",
        })
    }
}

/// One member of a class, in the labeling under which it was first found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub quiver: ColouredQuiver,
    pub form: CanonicalForm,
    pub depth: usize,
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub status: Status,
    /// One entry per canonical form, in discovery order.
    pub representatives: Vec<Representative>,
    pub depth_reached: usize,
}

impl EnumerationResult {
    pub fn size(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }

    pub fn contains(&self, q: &ColouredQuiver) -> bool {
        let form = canonical_form(q);
        self.representatives.iter().any(|r| r.form == form)
    }

    /// Representatives ordered by canonical bytes.
    pub fn sorted(&self) -> Vec<&Representative> {
        let mut out: Vec<_> = self.representatives.iter().collect();
        out.sort_by(|a, b| a.form.cmp(&b.form));
        out
    }
}

// Breadth-first search that stops early when `found` accepts a newly
// discovered representative. Each layer is expanded in parallel and merged in
// (parent, vertex) order, so discovery order does not depend on scheduling.
fn explore<F>(
    seed: &ColouredQuiver,
    cfg: &EnumerationConfig,
    mut found: F,
) -> Result<(EnumerationResult, Option<usize>)>
where
    F: FnMut(&Representative) -> bool,
{
    ensure_valid(seed)?;
    let deadline = cfg.time_budget.map(|b| Instant::now() + b);
    let n = seed.n();

    let root = Representative { quiver: seed.clone(), form: canonical_form(seed), depth: 0 };
    let mut index: HashMap<CanonicalForm, usize> = HashMap::new();
    index.insert(root.form.clone(), 0);
    let mut reps = vec![root];

    let finish = |reps: Vec<Representative>, status, hit| {
        let depth_reached = reps.iter().map(|r| r.depth).max().unwrap_or(0);
        Ok((EnumerationResult { status, representatives: reps, depth_reached }, hit))
    };

    if found(&reps[0]) {
        return finish(reps, Status::Complete, Some(0));
    }

    let mut layer = 0..1;
    let mut depth = 0;
    while !layer.is_empty() {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return finish(reps, Status::BoundExceeded, None);
        }
        let depth_capped = cfg.max_depth.is_some_and(|d| depth >= d);

        let children: Result<Vec<(ColouredQuiver, CanonicalForm)>> = reps[layer.clone()]
            .par_iter()
            .flat_map_iter(|rep| (0..n).map(move |j| (rep, j)))
            .map(|(rep, j)| {
                let child = mutate(&rep.quiver, j)?;
                let form = canonical_form(&child);
                Ok((child, form))
            })
            .collect();
        // multiplicities past u64 cannot belong to a class we can finish
        let children = match children {
            Err(QuiverError::Overflow) => return finish(reps, Status::BoundExceeded, None),
            other => other?,
        };

        let start = reps.len();
        for (quiver, form) in children {
            if index.contains_key(&form) {
                continue;
            }
            if depth_capped || reps.len() >= cfg.max_quivers {
                return finish(reps, Status::BoundExceeded, None);
            }
            index.insert(form.clone(), reps.len());
            reps.push(Representative { quiver, form, depth: depth + 1 });
            let last = reps.len() - 1;
            if found(&reps[last]) {
                return finish(reps, Status::BoundExceeded, Some(last));
            }
        }
        layer = start..reps.len();
        depth += 1;
    }
    finish(reps, Status::Complete, None)
}

/// Enumerates the mutation class of `seed` up to isomorphism.
///
/// `BoundExceeded` means the class is not known to be finite within the
/// configured bounds; it is never a proof of infiniteness.
pub fn enumerate(seed: &ColouredQuiver, cfg: &EnumerationConfig) -> Result<EnumerationResult> {
    explore(seed, cfg, |_| false).map(|(res, _)| res)
}

/// The first class member in discovery order with only colours 0 and `m`
/// and an acyclic Gabriel quiver.
pub fn find_bicoloured_acyclic_member(
    seed: &ColouredQuiver,
    cfg: &EnumerationConfig,
) -> Result<Option<ColouredQuiver>> {
    let (res, hit) = explore(seed, cfg, |rep| is_bicoloured_acyclic(&rep.quiver))?;
    Ok(hit.map(|idx| res.representatives[idx].quiver.clone()))
}
