//! Exhaustive fallback: every tableau compatible with what the minors
//! already reveal, filtered by recomputing its minors.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::minors::{minor_multiset, minor_set, MinorMultiset, MinorSet};
use crate::partition::{CellCoord, Partition};
use crate::tableau::{enumerate_shape, Tableau};
use crate::HARD_CEILING;

use super::locate::peel_top;
use super::shape::{recover_shape, ShapeRecovery};
use super::{check_sizes, is_inconsistency, ReconstructionResult};

/// All tableaux whose k-minor set equals `s`.
pub fn search_set(s: &MinorSet, n: usize, k: usize) -> Result<ReconstructionResult> {
    check_sizes(s.n_minor(), n, k)?;
    search(s, n, k, |t| Ok(minor_set(t, k)? == *s))
}

/// All tableaux whose k-minor multiset equals `ms`.
pub fn search_multiset(ms: &MinorMultiset, n: usize, k: usize) -> Result<ReconstructionResult> {
    check_sizes(ms.n_minor(), n, k)?;
    search(&ms.support(), n, k, |t| Ok(minor_multiset(t, k)? == *ms))
}

/// Candidate space: when the largest entries can be peeled off, only the
/// remaining base of size `k^2 + 2k` is searched; otherwise every tableau
/// whose shape has the observed sub-shapes.
fn search<F>(support: &MinorSet, n: usize, k: usize, accept: F) -> Result<ReconstructionResult>
where
    F: Fn(&Tableau) -> Result<bool> + Sync,
{
    if support.is_empty() {
        return Ok(ReconstructionResult::Inconsistent);
    }
    let (bases, top): (Vec<Partition>, BTreeMap<u32, CellCoord>) = if n >= (k + 1) * (k + 1) {
        match peel_top(support, n, k) {
            Ok((base, top)) => (vec![base], top),
            Err(e) if is_inconsistency(&e) => return Ok(ReconstructionResult::Inconsistent),
            Err(e) => return Err(e),
        }
    } else {
        match recover_shape(&support.shapes(), n, k) {
            Ok(ShapeRecovery::Unique(p)) => (vec![p], BTreeMap::new()),
            Ok(ShapeRecovery::Ambiguous(ps)) => (ps, BTreeMap::new()),
            Err(Error::NoCandidate { .. }) => return Ok(ReconstructionResult::Inconsistent),
            Err(e) => return Err(e),
        }
    };
    let base_size = n - top.len();
    if base_size > HARD_CEILING {
        return Err(Error::CeilingExceeded { n: base_size, ceiling: HARD_CEILING });
    }
    let candidates: Vec<Tableau> = bases.iter().flat_map(enumerate_shape).collect();
    let found = candidates
        .par_iter()
        .map(|base| {
            let Some(full) = attach(base, &top) else { return Ok(None) };
            Ok(accept(&full)?.then_some(full))
        })
        .collect::<Result<Vec<Option<Tableau>>>>()?;
    Ok(ReconstructionResult::from_matches(found.into_iter().flatten().collect()))
}

/// Adds the located entries in increasing order; `None` if a cell is not
/// addable at its turn.
pub(crate) fn attach(base: &Tableau, top: &BTreeMap<u32, CellCoord>) -> Option<Tableau> {
    let mut t = base.clone();
    for (&m, &c) in top {
        t = t.with_entry(c, m).ok()?;
    }
    Some(t)
}
