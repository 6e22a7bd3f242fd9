//! Partitions, cell coordinates and Young diagram geometry.
//!
//! Coordinates are 1-indexed `(row, col)` with row 1 at the top.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A 1-indexed cell position inside a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CellCoord {
    pub row: usize,
    pub col: usize,
}

impl CellCoord {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for CellCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Weakly decreasing positive row lengths. The empty list is the partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    rows: Vec<usize>,
    size: usize,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(rows));
        }
        let size = rows.iter().sum();
        Ok(Self { rows, size })
    }

    /// Caller guarantees the partition invariants.
    pub(crate) fn from_rows_unchecked(rows: Vec<usize>) -> Self {
        debug_assert!(rows.iter().all(|&r| r > 0) && rows.windows(2).all(|w| w[0] >= w[1]));
        let size = rows.iter().sum();
        Self { rows, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Length of 1-indexed row `r`, zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.rows.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, c: CellCoord) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row_len(c.row)
    }

    /// `true` iff `other` fits inside `self` row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.rows.len() <= self.rows.len() && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = CellCoord> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| CellCoord::new(r + 1, c)))
    }

    pub fn is_single_row(&self) -> bool {
        self.rows.len() == 1
    }

    pub fn is_single_column(&self) -> bool {
        !self.rows.is_empty() && self.rows[0] == 1
    }

    /// Cells ending both their row and their column, top to bottom.
    pub fn outer_corners(&self) -> Result<Vec<CellCoord>> {
        if self.is_empty() {
            return Err(Error::EmptyShape);
        }
        Ok(self
            .rows
            .iter()
            .enumerate()
            .filter(|&(r, &len)| len > self.rows.get(r + 1).copied().unwrap_or(0))
            .map(|(r, &len)| CellCoord::new(r + 1, len))
            .collect())
    }

    /// Cells that can be added keeping a partition, top to bottom.
    pub fn addable_cells(&self) -> Vec<CellCoord> {
        let mut out = Vec::new();
        for (r, &len) in self.rows.iter().enumerate() {
            if r == 0 || self.rows[r - 1] > len {
                out.push(CellCoord::new(r + 1, len + 1));
            }
        }
        out.push(CellCoord::new(self.rows.len() + 1, 1));
        out
    }

    /// Removes an outer corner.
    pub fn without_corner(&self, c: CellCoord) -> Result<Partition> {
        if !self.outer_corners()?.contains(&c) {
            return Err(Error::InvalidCoord(c));
        }
        let mut rows = self.rows.clone();
        rows[c.row - 1] -= 1;
        if rows[c.row - 1] == 0 {
            rows.pop();
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    /// Adds an addable cell.
    pub fn with_cell(&self, c: CellCoord) -> Result<Partition> {
        if !self.addable_cells().contains(&c) {
            return Err(Error::InvalidCoord(c));
        }
        let mut rows = self.rows.clone();
        if c.row > rows.len() {
            rows.push(1);
        } else {
            rows[c.row - 1] += 1;
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    /// The single cell of `self` missing from `smaller`, if the two differ by
    /// exactly one outer corner.
    pub fn corner_difference(&self, smaller: &Partition) -> Option<CellCoord> {
        if smaller.size + 1 != self.size || !self.contains(smaller) {
            return None;
        }
        (1..=self.rows.len())
            .find(|&r| self.row_len(r) != smaller.row_len(r))
            .map(|r| CellCoord::new(r, self.row_len(r)))
    }

    /// Splits the shape into the cells weakly above-left of `c` (including `c`)
    /// and the rest.
    pub fn regions(&self, c: CellCoord) -> Result<(BTreeSet<CellCoord>, BTreeSet<CellCoord>)> {
        if !self.contains_cell(c) {
            return Err(Error::InvalidCoord(c));
        }
        Ok(self.cells().partition(|x| x.row <= c.row && x.col <= c.col))
    }

    /// Number of cells strictly right of or below `c`, i.e. outside its inner area.
    pub fn outer_area(&self, c: CellCoord) -> Result<usize> {
        Ok(self.regions(c)?.1.len())
    }

    /// All partitions of size `m` contained in `self`.
    pub fn contained_partitions(&self, m: usize) -> Result<ShapeSet> {
        if m > self.size {
            return Err(Error::SizeOutOfRange { m, size: self.size });
        }
        let mut out = ShapeSet::new();
        let mut prefix = Vec::new();
        contained_rec(&self.rows, m, usize::MAX, &mut prefix, &mut out);
        Ok(out)
    }
}

fn contained_rec(bound: &[usize], remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut ShapeSet) {
    if remaining == 0 {
        out.insert(Partition::from_rows_unchecked(prefix.clone()));
        return;
    }
    let r = prefix.len();
    let Some(&cap) = bound.get(r) else { return };
    let hi = cap.min(max_part).min(remaining);
    // Parts shrink, so the rest must fit into the remaining rows.
    let room: usize = bound[r..].iter().map(|&b| b.min(hi)).sum();
    if room < remaining {
        return;
    }
    for part in (1..=hi).rev() {
        prefix.push(part);
        contained_rec(bound, remaining - part, part, prefix, out);
        prefix.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in reverse lexicographic order of row lists.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_rows_unchecked(prefix.clone()));
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Deduplicated collection of partitions.
pub type ShapeSet = BTreeSet<Partition>;

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> BTreeSet<CellCoord> {
        list.iter().map(|&(r, c)| CellCoord::new(r, c)).collect()
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::new(vec![]).unwrap().size(), 0);
    }

    #[test]
    fn outer_corners_of_eighteen_cell_shape() {
        let oc = p(&[5, 5, 4, 2, 1, 1]).outer_corners().unwrap();
        assert_eq!(oc, vec![CellCoord::new(2, 5), CellCoord::new(3, 4), CellCoord::new(4, 2), CellCoord::new(6, 1)]);
        assert_eq!(p(&[7]).outer_corners().unwrap(), vec![CellCoord::new(1, 7)]);
        assert_eq!(p(&[3, 3, 2]).outer_corners().unwrap(), vec![CellCoord::new(2, 3), CellCoord::new(3, 2)]);
        assert_eq!(Partition::empty().outer_corners(), Err(Error::EmptyShape));
    }

    #[test]
    fn regions_of_shaded_example() {
        let shape = p(&[5, 5, 4, 3, 3, 2, 1, 1]);
        let (inner, outer) = shape.regions(CellCoord::new(5, 3)).unwrap();
        assert_eq!(inner.len(), 15);
        assert_eq!(outer.len(), 9);
        assert_eq!(outer, cells(&[(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (6, 1), (6, 2), (7, 1), (8, 1)]));
    }

    #[test]
    fn regions_trivial_cases() {
        let (inner, outer) = p(&[4]).regions(CellCoord::new(1, 4)).unwrap();
        assert_eq!(inner.len(), 4);
        assert!(outer.is_empty());
        let (inner, outer) = p(&[2, 2]).regions(CellCoord::new(1, 1)).unwrap();
        assert_eq!(inner, cells(&[(1, 1)]));
        assert_eq!(outer, cells(&[(1, 2), (2, 1), (2, 2)]));
        assert_eq!(p(&[2, 2]).regions(CellCoord::new(3, 1)), Err(Error::InvalidCoord(CellCoord::new(3, 1))));
    }

    #[test]
    fn contained_partitions_examples() {
        let want: ShapeSet = [p(&[2]), p(&[1, 1])].into_iter().collect();
        assert_eq!(p(&[2, 1]).contained_partitions(2).unwrap(), want);
        assert_eq!(p(&[3]).contained_partitions(2).unwrap(), [p(&[2])].into_iter().collect());
        assert_eq!(p(&[2, 2]).contained_partitions(3).unwrap(), [p(&[2, 1])].into_iter().collect());
        assert!(p(&[2, 2]).contained_partitions(5).is_err());
    }

    #[test]
    fn contained_partitions_match_filtered_enumeration() {
        for n in 0..=9 {
            for lambda in partitions_of(n) {
                for m in 0..=n {
                    let brute: ShapeSet = partitions_of(m).into_iter().filter(|mu| lambda.contains(mu)).collect();
                    assert_eq!(lambda.contained_partitions(m).unwrap(), brute, "{lambda} {m}");
                }
                let same = lambda.contained_partitions(n).unwrap();
                assert_eq!(same.into_iter().collect::<Vec<_>>(), vec![lambda.clone()]);
                if n > 0 {
                    let one_less = lambda.contained_partitions(n - 1).unwrap();
                    assert_eq!(one_less.len(), lambda.outer_corners().unwrap().len());
                }
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn corner_difference_and_editing() {
        let lam = p(&[3, 2]);
        let c = CellCoord::new(2, 2);
        let mu = lam.without_corner(c).unwrap();
        assert_eq!(mu, p(&[3, 1]));
        assert_eq!(lam.corner_difference(&mu), Some(c));
        assert_eq!(mu.with_cell(c).unwrap(), lam);
        assert_eq!(lam.corner_difference(&p(&[2, 2])), Some(CellCoord::new(1, 3)));
        assert_eq!(lam.corner_difference(&p(&[2, 1, 1])), None);
        assert!(lam.without_corner(CellCoord::new(1, 2)).is_err());
    }
}
