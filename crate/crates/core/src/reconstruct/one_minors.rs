use std::collections::BTreeMap;

use crate::error::Result;
use crate::minors::MinorSet;
use crate::partition::{CellCoord, Partition};
use crate::tableau::Tableau;
use crate::taquin::promotion;

use super::search::search_set;
use super::shape::{recover_shape, ShapeRecovery};
use super::{check_sizes, confirm_set, is_inconsistency, ReconstructionResult};

/// The run `1, 2, ..., len` along the first row or the first column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitialString {
    Row(usize),
    Column(usize),
}

impl InitialString {
    /// Same direction and strictly shorter.
    fn properly_inside(self, other: Self) -> bool {
        match (self, other) {
            (Self::Row(a), Self::Row(b)) | (Self::Column(a), Self::Column(b)) => a < b,
            _ => false,
        }
    }
}

pub fn initial_string(t: &Tableau) -> InitialString {
    if t.get(CellCoord::new(2, 1)) == Some(2) {
        let len = t.rows().iter().zip(1u32..).take_while(|(row, v)| row[0] == *v).count();
        InitialString::Column(len)
    } else {
        let first_row = t.rows().first().map_or(&[][..], Vec::as_slice);
        let len = first_row.iter().zip(1u32..).take_while(|(x, v)| **x == *v).count();
        InitialString::Row(len)
    }
}

/// Reconstructs `T` from `M_1(T)` without searching.
///
/// Picks out `T - 1` among the minors, puts `n` into the corner where its
/// shape falls short of the recovered shape (giving the dual promotion of
/// `T`), and undoes the dual promotion. Below `n = 5` collisions exist and
/// a search reports them.
pub fn reconstruct_from_1minors(s: &MinorSet, n: usize) -> Result<ReconstructionResult> {
    check_sizes(s.n_minor(), n, 1)?;
    if s.is_empty() {
        return Ok(ReconstructionResult::Inconsistent);
    }
    if n < 5 {
        return search_set(s, n, 1);
    }
    match reconstruct_inner(s, n) {
        Ok(Some(t)) => confirm_set(t, s, 1),
        Ok(None) => Ok(ReconstructionResult::Inconsistent),
        Err(e) if is_inconsistency(&e) => Ok(ReconstructionResult::Inconsistent),
        Err(e) => Err(e),
    }
}

fn reconstruct_inner(s: &MinorSet, n: usize) -> Result<Option<Tableau>> {
    let shape = match recover_shape(&s.shapes(), n, 1)? {
        ShapeRecovery::Unique(p) => p,
        ShapeRecovery::Ambiguous(_) => return Ok(None),
    };
    if shape.is_single_row() {
        return Ok(Some(Tableau::single_row(n as u32)));
    }
    if shape.is_single_column() {
        return Ok(Some(Tableau::single_column(n as u32)));
    }
    let Some(minus_one) = find_minus_one(s, is_row_with_tail(&shape)) else {
        return Ok(None);
    };
    let Some(corner) = shape.corner_difference(minus_one.shape()) else {
        return Ok(None);
    };
    let dual = minus_one.with_entry(corner, n as u32)?;
    Ok(Some(promotion(&dual)?))
}

/// Finds `T - 1` among the 1-minors.
fn find_minus_one(s: &MinorSet, row_with_tail: bool) -> Option<&Tableau> {
    let minors: Vec<&Tableau> = s.iter().collect();
    let strings: Vec<InitialString> = minors.iter().map(|t| initial_string(t)).collect();

    let minimal: Vec<usize> = (0..minors.len())
        .filter(|&i| (0..minors.len()).all(|j| j == i || strings[i].properly_inside(strings[j])))
        .collect();
    if let [i] = minimal.as_slice() {
        if minors.len() > 1 {
            return Some(minors[*i]);
        }
    }

    if minors.len() >= 3 {
        // Initial string of length 2: T - 1 is the only minor with 2 where it is.
        let mut by_cell: BTreeMap<Option<CellCoord>, Vec<usize>> = BTreeMap::new();
        for (i, t) in minors.iter().enumerate() {
            by_cell.entry(t.position_of(2)).or_default().push(i);
        }
        let lonely: Vec<usize> = by_cell.values().filter(|v| v.len() == 1).map(|v| v[0]).collect();
        return match lonely.as_slice() {
            [i] => Some(minors[*i]),
            _ => None,
        };
    }

    // Two minors: the shape is (n-1, 1) or its transpose, and T - 1 is the
    // single row or single column respectively.
    if row_with_tail {
        minors.into_iter().find(|t| t.shape().is_single_row())
    } else {
        minors.into_iter().find(|t| t.shape().is_single_column())
    }
}

/// `(m, 1)`: one long row and a single cell beneath.
fn is_row_with_tail(p: &Partition) -> bool {
    p.rows().len() == 2 && p.rows()[1] == 1
}
