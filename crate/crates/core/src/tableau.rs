//! Standard Young tableaux: validation, lookup and exhaustive enumeration.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::{CellCoord, Partition};

/// A standard Young tableau over the alphabet `[1, alphabet_max]`.
///
/// Entries are distinct, strictly increasing along rows and down columns.
/// In the dense case `alphabet_max` equals the number of cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    alphabet_max: u32,
}

impl Tableau {
    /// Validates a row-major filling of `shape`.
    pub fn new(shape: Partition, entries: &[u32], alphabet_max: u32) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::ShapeMismatch { expected: shape.size(), found: entries.len() });
        }
        if (alphabet_max as usize) < shape.size() {
            return Err(Error::NotStandard(format!(
                "alphabet [1, {alphabet_max}] is smaller than the shape size {}",
                shape.size()
            )));
        }
        let mut rows = Vec::with_capacity(shape.num_rows());
        let mut it = entries.iter().copied();
        for &len in shape.rows() {
            rows.push(it.by_ref().take(len).collect::<Vec<_>>());
        }
        let t = Self { shape, rows, alphabet_max };
        t.check()?;
        Ok(t)
    }

    /// Dense tableau from rows listed top to bottom.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let entries: Vec<u32> = rows.concat();
        let max = entries.iter().copied().max().unwrap_or(0).max(entries.len() as u32);
        Self::new(shape, &entries, max)
    }

    pub(crate) fn from_parts_unchecked(rows: Vec<Vec<u32>>, alphabet_max: u32) -> Self {
        let shape = Partition::from_rows_unchecked(rows.iter().map(Vec::len).collect());
        let t = Self { shape, rows, alphabet_max };
        debug_assert!(t.check().is_ok(), "invalid tableau {t}");
        t
    }

    fn check(&self) -> Result<()> {
        let mut seen = vec![false; self.alphabet_max as usize + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > self.alphabet_max {
                    return Err(Error::AlphabetViolation { entry: v, alphabet_max: self.alphabet_max });
                }
                if std::mem::replace(&mut seen[v as usize], true) {
                    return Err(Error::NotStandard(format!("entry {v} repeated")));
                }
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::NotStandard(format!("row {} decreases at column {}", r + 1, c + 1)));
                }
                if r > 0 && self.rows[r - 1][c] >= v {
                    return Err(Error::NotStandard(format!("column {} decreases at row {}", c + 1, r + 1)));
                }
            }
        }
        Ok(())
    }

    /// The tableau with no cells.
    pub fn empty() -> Self {
        Self { shape: Partition::empty(), rows: Vec::new(), alphabet_max: 0 }
    }

    /// The single-row tableau `1 2 ... n`.
    pub fn single_row(n: u32) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Self::from_parts_unchecked(vec![(1..=n).collect()], n)
    }

    /// The single-column tableau with entries `1..=n` top to bottom.
    pub fn single_column(n: u32) -> Self {
        Self::from_parts_unchecked((1..=n).map(|v| vec![v]).collect(), n)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn alphabet_max(&self) -> u32 {
        self.alphabet_max
    }

    /// `true` when the entries are exactly `1..=n`.
    pub fn is_dense(&self) -> bool {
        self.alphabet_max as usize == self.size()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn get(&self, c: CellCoord) -> Option<u32> {
        if c.row == 0 || c.col == 0 {
            return None;
        }
        self.rows.get(c.row - 1)?.get(c.col - 1).copied()
    }

    pub fn position_of(&self, m: u32) -> Option<CellCoord> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&v| v == m).map(|c| CellCoord::new(r + 1, c + 1)))
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    /// Places `value` at an addable cell. The result must remain standard.
    pub fn with_entry(&self, c: CellCoord, value: u32) -> Result<Tableau> {
        self.shape.with_cell(c)?;
        let mut rows = self.rows.clone();
        if c.row > rows.len() {
            rows.push(vec![value]);
        } else {
            rows[c.row - 1].push(value);
        }
        let t = Self {
            shape: Partition::from_rows_unchecked(rows.iter().map(Vec::len).collect()),
            rows,
            alphabet_max: self.alphabet_max.max(value),
        };
        t.check()?;
        Ok(t)
    }
}

impl fmt::Display for Tableau {
    /// One line per row, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Number of standard Young tableaux of size `n` (the involution numbers),
/// from `I(n) = I(n-1) + (n-1) I(n-2)`.
pub fn count_syt(n: usize) -> BigUint {
    let mut prev = BigUint::from(1u32);
    let mut cur = BigUint::from(1u32);
    for i in 2..=n {
        let next = &cur + &prev * BigUint::from(i - 1);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Every tableau in `YT(n)` exactly once.
///
/// Order: the tableaux of `YT(n-1)` in their own order, each extended by
/// placing `n` at its addable cells from top to bottom.
pub fn enumerate_syt(n: usize) -> SytIter {
    SytIter::new(n, None)
}

/// Every standard tableau of the given shape, in the same recursive order.
pub fn enumerate_shape(shape: &Partition) -> SytIter {
    SytIter::new(shape.size(), Some(shape.clone()))
}

/// Depth-first walk over placements of `1, 2, ..., n`.
///
/// The choice made at each level is the index of a row (0-based) that
/// receives the next entry; trying rows in increasing order yields the
/// lexicographic order of choice sequences, which is the recursive order
/// documented on [`enumerate_syt`].
pub struct SytIter {
    n: usize,
    bound: Option<Partition>,
    rows: Vec<Vec<u32>>,
    choices: Vec<usize>,
    started: bool,
    done: bool,
}

impl SytIter {
    fn new(n: usize, bound: Option<Partition>) -> Self {
        Self { n, bound, rows: Vec::new(), choices: Vec::new(), started: false, done: false }
    }

    fn can_place(&self, r: usize) -> bool {
        let len = self.rows.get(r).map_or(0, Vec::len);
        if r > self.rows.len() {
            return false;
        }
        if r > 0 && self.rows[r - 1].len() <= len {
            return false;
        }
        match &self.bound {
            Some(b) => len < b.row_len(r + 1),
            None => true,
        }
    }

    fn place(&mut self, r: usize) {
        let v = self.choices.len() as u32 + 1;
        if r == self.rows.len() {
            self.rows.push(Vec::new());
        }
        self.rows[r].push(v);
        self.choices.push(r);
    }

    fn unplace(&mut self) -> usize {
        let r = self.choices.pop().expect("nonempty choice stack");
        self.rows[r].pop();
        if self.rows[r].is_empty() {
            self.rows.pop();
        }
        r
    }

    fn first_from(&self, start: usize) -> Option<usize> {
        (start..=self.rows.len()).find(|&r| self.can_place(r))
    }

    /// Fills greedily from the current prefix; false on a dead end.
    fn descend(&mut self) -> bool {
        while self.choices.len() < self.n {
            match self.first_from(0) {
                Some(r) => self.place(r),
                None => return false,
            }
        }
        true
    }

    /// Moves to the next choice at the deepest level that has one.
    fn advance(&mut self) -> bool {
        while !self.choices.is_empty() {
            let r = self.unplace();
            if let Some(next) = self.first_from(r + 1) {
                self.place(next);
                return true;
            }
        }
        false
    }

    fn current(&self) -> Tableau {
        Tableau::from_parts_unchecked(self.rows.clone(), self.n as u32)
    }
}

impl Iterator for SytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.descend() {
                return Some(self.current());
            }
        }
        loop {
            if !self.advance() {
                self.done = true;
                return None;
            }
            if self.descend() {
                return Some(self.current());
            }
        }
    }
}
