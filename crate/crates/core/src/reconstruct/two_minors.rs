use crate::error::Result;
use crate::minors::{apply_remove_range, minor_set, MinorSet};
use crate::partition::CellCoord;
use crate::tableau::{enumerate_shape, Tableau};

use super::locate::{locate_n, peel_top};
use super::search::{attach, search_set};
use super::shape::unique_shape;
use super::{check_sizes, is_inconsistency, ReconstructionResult};

/// Necessary condition for `minor` to be a minor of `candidate` in which the
/// outer corner `c` kept its value `m`: every entry below `m` sits in the
/// same cell in both.
pub fn inner_filter(candidate: &Tableau, minor: &Tableau, c: CellCoord, m: u32) -> bool {
    debug_assert_eq!(minor.get(c), Some(m));
    (1..m).all(|v| candidate.position_of(v) == minor.position_of(v))
}

/// Reconstructs `T` from `M_2(T)` for `n >= 8`.
///
/// Entries `9..=n` are peeled off first; the remaining size-8 problem sees
/// the minors with their top entries removed. There the cell of 8 is
/// located, candidates of the recovered shape with 8 in that cell are
/// pruned by [`inner_filter`], and the survivor must reproduce the minors.
/// Below `n = 8` a search lists every tableau sharing the input.
pub fn reconstruct_from_2minors(s: &MinorSet, n: usize) -> Result<ReconstructionResult> {
    check_sizes(s.n_minor(), n, 2)?;
    if s.is_empty() {
        return Ok(ReconstructionResult::Inconsistent);
    }
    if n < 8 {
        return search_set(s, n, 2);
    }
    let (base_minors, top) = if n >= 9 {
        match peel_top(s, n, 2) {
            Ok((_, top)) => (apply_remove_range(s, 7)?, top),
            Err(e) if is_inconsistency(&e) => return Ok(ReconstructionResult::Inconsistent),
            Err(e) => return Err(e),
        }
    } else {
        (s.clone(), Default::default())
    };
    let bases = match size_eight(&base_minors) {
        Ok(b) => b,
        Err(e) if is_inconsistency(&e) => return Ok(ReconstructionResult::Inconsistent),
        Err(e) => return Err(e),
    };
    let mut found = Vec::new();
    for base in bases {
        if let Some(t) = attach(&base, &top) {
            if minor_set(&t, 2)? == *s {
                found.push(t);
            }
        }
    }
    Ok(ReconstructionResult::from_matches(found))
}

/// All size-8 tableaux consistent with `s8 = M_2(T)`.
fn size_eight(s8: &MinorSet) -> Result<Vec<Tableau>> {
    let shape = unique_shape(&s8.shapes(), 8, 2)?;
    let cell = locate_n(s8, 8, 2)?;
    let rest = shape.without_corner(cell)?;
    let mut out = Vec::new();
    for inner in enumerate_shape(&rest) {
        let candidate = inner.with_entry(cell, 8)?;
        if passes_corner_filters(&candidate, s8) && minor_set(&candidate, 2)? == *s8 {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// Every minor that shows a corner's own value at that corner must agree
/// with the candidate on all smaller entries.
fn passes_corner_filters(candidate: &Tableau, minors: &MinorSet) -> bool {
    let corners = candidate.shape().outer_corners().expect("nonempty candidate");
    corners.into_iter().all(|c| {
        let m = candidate.get(c).expect("corner is a cell");
        minors.iter().filter(|t| t.get(c) == Some(m)).all(|t| inner_filter(candidate, t, c, m))
    })
}
