//! Recovering a tableau, or parts of it, from its minors.
//!
//! Every public entry point takes the minors together with the size `n` of
//! the unknown tableau. Valid inputs above the known bounds come back as
//! [`ReconstructionResult::Unique`]; below the bounds the procedures fall
//! back to a search and report collisions honestly as
//! [`ReconstructionResult::Ambiguous`]. Inputs that are not the minors of
//! any tableau give [`ReconstructionResult::Inconsistent`].

mod bounds;
mod locate;
mod multiset;
mod one_minors;
mod search;
mod shape;
mod two_minors;

pub use bounds::{binomial, bound_report, majority_bound_holds, BoundReport};
pub use locate::{classify_outer_corners, locate_n, locate_top_entries, OcClass, OcClassification};
pub use multiset::{fixed_location_count, reconstruct_multiset};
pub use one_minors::{initial_string, reconstruct_from_1minors, InitialString};
pub use search::{search_multiset, search_set};
pub use shape::{monks_shape_guarantee, recover_shape, ShapeRecovery};
pub use two_minors::{inner_filter, reconstruct_from_2minors};

use crate::error::{Error, Result};
use crate::minors::{minor_set, MinorSet};
use crate::tableau::Tableau;

/// Outcome of a reconstruction attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReconstructionResult {
    /// The only tableau whose minors equal the input.
    Unique(Tableau),
    /// Several tableaux share the input, listed in canonical key order.
    Ambiguous(Vec<Tableau>),
    /// No tableau has these minors.
    Inconsistent,
}

impl ReconstructionResult {
    pub fn status(&self) -> &'static str {
        match self {
            Self::Unique(_) => "unique",
            Self::Ambiguous(_) => "ambiguous",
            Self::Inconsistent => "inconsistent",
        }
    }

    pub fn tableaux(&self) -> &[Tableau] {
        match self {
            Self::Unique(t) => std::slice::from_ref(t),
            Self::Ambiguous(ts) => ts,
            Self::Inconsistent => &[],
        }
    }

    pub fn unique(&self) -> Option<&Tableau> {
        match self {
            Self::Unique(t) => Some(t),
            _ => None,
        }
    }

    pub(crate) fn from_matches(mut found: Vec<Tableau>) -> Self {
        found.sort_by_key(Tableau::key);
        found.dedup();
        match found.len() {
            0 => Self::Inconsistent,
            1 => Self::Unique(found.pop().expect("one element")),
            _ => Self::Ambiguous(found),
        }
    }
}

/// Set-based reconstruction for any `k`: the dedicated procedures for
/// `k = 1` and `k = 2`, a search otherwise.
pub fn reconstruct_from_minors(s: &MinorSet, n: usize, k: usize) -> Result<ReconstructionResult> {
    match k {
        1 => reconstruct_from_1minors(s, n),
        2 => reconstruct_from_2minors(s, n),
        _ => search_set(s, n, k),
    }
}

pub(crate) fn check_sizes(n_minor: usize, n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::KTooLarge { k, n });
    }
    if n_minor != n - k {
        return Err(Error::PreconditionUnmet(format!(
            "minors have size {n_minor}, expected {} for n = {n}, k = {k}",
            n - k
        )));
    }
    Ok(())
}

/// Errors that mean "these are not the minors of any tableau".
pub(crate) fn is_inconsistency(e: &Error) -> bool {
    matches!(
        e,
        Error::NoCandidate { .. }
            | Error::ShapeAmbiguous { .. }
            | Error::InconsistentDiff { .. }
            | Error::InconsistentMinors(_)
            | Error::NoSurvivingMinor(_)
            | Error::InvalidCoord(_)
            | Error::NotStandard(_)
    )
}

/// Accepts `candidate` only if its minors reproduce the input exactly.
pub(crate) fn confirm_set(candidate: Tableau, s: &MinorSet, k: usize) -> Result<ReconstructionResult> {
    if minor_set(&candidate, k)? == *s {
        Ok(ReconstructionResult::Unique(candidate))
    } else {
        Ok(ReconstructionResult::Inconsistent)
    }
}
