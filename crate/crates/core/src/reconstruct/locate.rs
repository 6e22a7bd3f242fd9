//! Locating large entries of an unknown tableau from its k-minors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::minors::{apply_remove_range, MinorSet};
use crate::partition::{CellCoord, Partition};

use super::check_sizes;
use super::shape::unique_shape;

/// Cells of the entries `(k+1)^2 ..= n`, keyed by entry.
///
/// Peels the largest entries one at a time: the minors of the tableau with
/// `[m, n]` removed are the input minors with their top `n - m + 1` entries
/// removed, and consecutive recovered shapes differ by the cell of `m`.
pub fn locate_top_entries(s: &MinorSet, n: usize, k: usize) -> Result<BTreeMap<u32, CellCoord>> {
    Ok(peel_top(s, n, k)?.1)
}

/// Also returns the shape left after peeling, of size `k^2 + 2k`.
pub(crate) fn peel_top(s: &MinorSet, n: usize, k: usize) -> Result<(Partition, BTreeMap<u32, CellCoord>)> {
    check_sizes(s.n_minor(), n, k)?;
    let low = (k + 1) * (k + 1);
    if n < low {
        return Err(Error::PreconditionUnmet(format!("need n >= {low} to peel entries, got {n}")));
    }
    let mut shape = unique_shape(&s.shapes(), n, k)?;
    let mut cells = BTreeMap::new();
    for m in (low..=n).rev() {
        let reduced = apply_remove_range(s, (m - k) as u32)?;
        let smaller = unique_shape(&reduced.shapes(), m - 1, k)?;
        let cell = shape.corner_difference(&smaller).ok_or(Error::InconsistentDiff { entry: m as u32 })?;
        cells.insert(m as u32, cell);
        shape = smaller;
    }
    Ok((shape, cells))
}

/// What the minors reveal about the value at an outer corner of the shape
/// `((k+1)^k, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OcClass {
    /// The corner holds exactly this value, which lies in `[n-k, n-2]`.
    ExactValue(u32),
    /// The corner holds `n - 1` or `n`.
    TopPair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OcClassification {
    /// Upper corner first, then lower.
    pub corners: Vec<(CellCoord, OcClass)>,
}

/// The `(k+1) x (k+1)` square missing its lower-right cell.
fn square_minus_corner(k: usize) -> Partition {
    let mut rows = vec![k + 1; k];
    rows.push(k);
    Partition::new(rows).expect("valid partition")
}

/// Classifies both outer corners of the shape `((k+1)^k, k)` at
/// `n = k^2 + 2k`.
///
/// For the upper corner, look at its column from the corner upwards; for
/// the lower corner, at its row from the corner leftwards. The furthest
/// position `p` (1 = the corner itself) at which some minor shows `n - k`
/// reaches `k` exactly when the corner holds `n - 1` or `n`; otherwise the
/// corner holds `n - k - 1 + p`.
pub fn classify_outer_corners(s: &MinorSet, n: usize, k: usize) -> Result<OcClassification> {
    check_sizes(s.n_minor(), n, k)?;
    let special = square_minus_corner(k);
    if n != k * k + 2 * k {
        return Err(Error::PreconditionUnmet(format!("corner classification needs n = {}", k * k + 2 * k)));
    }
    let shape = unique_shape(&s.shapes(), n, k)?;
    if shape != special {
        return Err(Error::PreconditionUnmet(format!("shape {shape} is not {special}")));
    }
    let target = (n - k) as u32;
    let reach = |line: &dyn Fn(usize) -> CellCoord| -> Result<OcClass> {
        let p = (1..=k)
            .filter(|&pos| s.iter().any(|t| t.get(line(pos)) == Some(target)))
            .max()
            .ok_or_else(|| Error::InconsistentMinors(format!("no minor shows {target} next to a corner")))?;
        Ok(if p == k { OcClass::TopPair } else { OcClass::ExactValue(target - 1 + p as u32) })
    };
    let upper = CellCoord::new(k, k + 1);
    let lower = CellCoord::new(k + 1, k);
    let upper_class = reach(&|pos| CellCoord::new(k + 1 - pos, k + 1))?;
    let lower_class = reach(&|pos| CellCoord::new(k + 1, k + 1 - pos))?;
    Ok(OcClassification { corners: vec![(upper, upper_class), (lower, lower_class)] })
}

/// Cell of `n` in the unknown tableau, for `n >= k^2 + 2k`.
///
/// When at most one outer corner has an outer area of at most `k` cells, a
/// corner holds `n` exactly when the smallest value it shows across the
/// minors where it survives is `n - k`; the small corner, if any, is decided
/// by elimination. Otherwise the shape is `((k+1)^k, k)` and the corner
/// classification, then the relative rows of `n-k-1` and `n-k` in a
/// suitable minor, decide (this needs `k >= 2`).
pub fn locate_n(s: &MinorSet, n: usize, k: usize) -> Result<CellCoord> {
    check_sizes(s.n_minor(), n, k)?;
    if n < k * k + 2 * k {
        return Err(Error::PreconditionUnmet(format!("need n >= {}, got {n}", k * k + 2 * k)));
    }
    let shape = unique_shape(&s.shapes(), n, k)?;
    let corners = shape.outer_corners()?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    for &c in &corners {
        if shape.outer_area(c)? <= k {
            small.push(c);
        } else {
            large.push(c);
        }
    }
    if small.len() <= 1 {
        return locate_by_minimum(s, n, k, &large, small.first().copied());
    }
    if k < 2 {
        return Err(Error::PreconditionUnmet("the square-minus-corner case needs k >= 2".into()));
    }
    locate_on_square(s, n, k, &shape)
}

fn locate_by_minimum(
    s: &MinorSet,
    n: usize,
    k: usize,
    large: &[CellCoord],
    leftover: Option<CellCoord>,
) -> Result<CellCoord> {
    let target = (n - k) as u32;
    let mut hits = Vec::new();
    for &c in large {
        // A surviving corner is never refilled by a slide, so presence of
        // the cell in a minor means the corner survived.
        let min = s.iter().filter_map(|t| t.get(c)).min().ok_or(Error::NoSurvivingMinor(c))?;
        if min == target {
            hits.push(c);
        }
    }
    match (hits.as_slice(), leftover) {
        ([c], _) => Ok(*c),
        ([], Some(c)) => Ok(c),
        ([], None) => Err(Error::InconsistentMinors(format!("no outer corner can hold {n}"))),
        _ => Err(Error::InconsistentMinors(format!("several outer corners can hold {n}"))),
    }
}

fn locate_on_square(s: &MinorSet, n: usize, k: usize, shape: &Partition) -> Result<CellCoord> {
    let classes = classify_outer_corners(s, n, k)?;
    let exact: Vec<_> = classes.corners.iter().filter(|(_, c)| matches!(c, OcClass::ExactValue(_))).collect();
    let top: Vec<_> = classes.corners.iter().filter(|(_, c)| *c == OcClass::TopPair).collect();
    match (exact.len(), top.len()) {
        (1, 1) => return Ok(top[0].0),
        (0, 2) => {}
        _ => return Err(Error::InconsistentMinors("corner classes do not fit a tableau".into())),
    }
    let (upper, lower) = (classes.corners[0].0, classes.corners[1].0);

    // Cells whose smallest observed value is exactly n - 2k.
    let floor = (n - 2 * k) as u32;
    let critical: Vec<CellCoord> =
        shape.cells().filter(|&c| s.iter().filter_map(|t| t.get(c)).min() == Some(floor)).collect();
    let adjacent = CellCoord::new(k, k);
    let away: Vec<CellCoord> = critical.iter().copied().filter(|&c| c != adjacent).collect();
    let holder = match away.as_slice() {
        [c] => *c,
        [] if critical.contains(&adjacent) => adjacent,
        _ => return Err(Error::InconsistentMinors(format!("cannot place {}", n - k))),
    };

    let witness = s.iter().find(|t| t.get(holder) == Some(floor)).expect("holder attains the floor in some minor");
    let row_of = |v: u32| {
        witness.position_of(v).map(|c| c.row).ok_or_else(|| Error::InconsistentMinors(format!("minor lacks {v}")))
    };
    let hi = row_of((n - k) as u32)?;
    let lo = row_of((n - k - 1) as u32)?;
    Ok(if hi > lo { lower } else { upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::minor_set;
    use crate::tableau::{enumerate_shape, enumerate_syt, Tableau};

    #[test]
    fn peels_single_rows() {
        let s = minor_set(&Tableau::single_row(5), 1).unwrap();
        let got = locate_top_entries(&s, 5, 1).unwrap();
        let want = BTreeMap::from([(4, CellCoord::new(1, 4)), (5, CellCoord::new(1, 5))]);
        assert_eq!(got, want);
    }

    #[test]
    fn top_entries_exhaustive_small() {
        for (n, k) in [(6usize, 1usize), (5, 1), (9, 2)] {
            for t in enumerate_syt(n) {
                let s = minor_set(&t, k).unwrap();
                let got = locate_top_entries(&s, n, k).unwrap();
                let low = ((k + 1) * (k + 1)) as u32;
                assert_eq!(got.len(), n + 1 - low as usize);
                for (m, c) in got {
                    assert_eq!(t.position_of(m), Some(c), "{t}");
                }
            }
        }
    }

    #[test]
    fn below_peel_bound_is_rejected() {
        let s = minor_set(&Tableau::single_row(8), 2).unwrap();
        assert!(matches!(locate_top_entries(&s, 8, 2), Err(Error::PreconditionUnmet(_))));
    }

    #[test]
    fn corner_classification_on_three_three_two() {
        let shape = Partition::new(vec![3, 3, 2]).unwrap();
        for t in enumerate_shape(&shape) {
            let s = minor_set(&t, 2).unwrap();
            let cls = classify_outer_corners(&s, 8, 2).unwrap();
            for (c, class) in cls.corners {
                let v = t.get(c).unwrap();
                assert!(v >= 6);
                match class {
                    OcClass::ExactValue(x) => assert_eq!(x, v),
                    OcClass::TopPair => assert!(v == 7 || v == 8),
                }
            }
        }
    }

    #[test]
    fn single_row_top_corner() {
        for n in 8..=10 {
            let s = minor_set(&Tableau::single_row(n), 2).unwrap();
            assert_eq!(locate_n(&s, n as usize, 2).unwrap(), CellCoord::new(1, n as usize));
        }
    }

    #[test]
    fn k_one_square_case_needs_k_two() {
        let t = Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        let s = minor_set(&t, 1).unwrap();
        assert!(matches!(locate_n(&s, 3, 1), Err(Error::PreconditionUnmet(_))));
    }

    #[test]
    fn locates_n_for_one_minors() {
        for n in 4..=7 {
            for t in enumerate_syt(n) {
                if t.shape().outer_corners().unwrap().iter().filter(|&&c| t.shape().outer_area(c).unwrap() <= 1).count()
                    > 1
                {
                    continue;
                }
                let s = minor_set(&t, 1).unwrap();
                assert_eq!(locate_n(&s, n, 1).unwrap(), t.position_of(n as u32).unwrap(), "{t}");
            }
        }
    }
}
