use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::minors::{minor_multiset, MinorMultiset};
use crate::partition::CellCoord;
use crate::tableau::Tableau;
use crate::taquin::jdt_delete;

use super::bounds::majority_bound_holds;
use super::locate::peel_top;
use super::search::search_multiset;
use super::{check_sizes, is_inconsistency, ReconstructionResult};

/// Reconstructs `T` from `mM_k(T)`.
///
/// When `2 C(n - k^2 - 2k, k) > C(n, k)`, the entries from `(k+1)^2` up are
/// peeled off the support and every smaller entry `m` goes to the cell where
/// `m` appears with the largest total multiplicity. The answer is checked by
/// recomputing the multiset; if the inequality fails or the check does, a
/// search decides.
pub fn reconstruct_multiset(ms: &MinorMultiset, n: usize, k: usize) -> Result<ReconstructionResult> {
    check_sizes(ms.n_minor(), n, k)?;
    if ms.is_empty() {
        return Ok(ReconstructionResult::Inconsistent);
    }
    if majority_bound_holds(n, k) {
        match majority_vote(ms, n, k) {
            Ok(Some(t)) if minor_multiset(&t, k)? == *ms => return Ok(ReconstructionResult::Unique(t)),
            Ok(_) => {}
            Err(e) if is_inconsistency(&e) => return Ok(ReconstructionResult::Inconsistent),
            Err(e) => return Err(e),
        }
    }
    search_multiset(ms, n, k)
}

fn majority_vote(ms: &MinorMultiset, n: usize, k: usize) -> Result<Option<Tableau>> {
    let (_, top) = peel_top(&ms.support(), n, k)?;
    let low = k * k + 2 * k;
    let mut cells: BTreeMap<u32, CellCoord> = BTreeMap::new();
    for m in 1..=low as u32 {
        let mut tally: BTreeMap<CellCoord, u64> = BTreeMap::new();
        for (t, count) in ms.iter() {
            if let Some(c) = t.position_of(m) {
                *tally.entry(c).or_default() += count;
            }
        }
        let best = tally.values().copied().max().unwrap_or(0);
        let mut leaders = tally.iter().filter(|&(_, &v)| v == best).map(|(c, _)| *c);
        match (leaders.next(), leaders.next()) {
            (Some(c), None) => {
                cells.insert(m, c);
            }
            _ => return Ok(None),
        }
    }
    cells.extend(top);
    let mut t = Tableau::empty();
    for (&m, &c) in &cells {
        t = match t.with_entry(c, m) {
            Ok(next) => next,
            Err(Error::InvalidCoord(_)) | Err(Error::NotStandard(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
    }
    Ok(Some(t))
}

/// Number of ordered deletion sequences of length `k` after which `m` still
/// sits in its original cell with its original value.
pub fn fixed_location_count(t: &Tableau, k: usize, m: u32) -> Result<u64> {
    let home = t.position_of(m).ok_or(Error::EntryAbsent(m))?;
    if k >= t.size() {
        return Err(Error::KTooLarge { k, n: t.size() });
    }
    fn walk(s: &Tableau, depth: usize, home: CellCoord, m: u32) -> Result<u64> {
        if depth == 0 {
            return Ok(u64::from(s.get(home) == Some(m)));
        }
        let mut total = 0;
        for v in s.entries() {
            total += walk(&jdt_delete(s, v)?, depth - 1, home, m)?;
        }
        Ok(total)
    }
    walk(t, k, home, m)
}
