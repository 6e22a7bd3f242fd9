//! Jeu de taquin deletion, top-range removal and (dual) promotion.

use crate::error::{Error, Result};
use crate::partition::CellCoord;
use crate::tableau::Tableau;

/// Record of one deletion: where the gap travelled and which corner emptied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionTrace {
    pub deleted_entry: u32,
    /// Gap positions, starting at the deleted cell. Each step goes right or down.
    pub slide_path: Vec<CellCoord>,
    pub terminal_corner: CellCoord,
}

/// `T - m`: delete `m`, slide the gap out to an outer corner, then decrement
/// every entry above `m`. The result lives over `[1, N-1]`.
pub fn jdt_delete(t: &Tableau, m: u32) -> Result<Tableau> {
    delete_impl(t, m, false).map(|(t, _)| t)
}

/// [`jdt_delete`] that also reports the slide path.
pub fn jdt_delete_traced(t: &Tableau, m: u32) -> Result<(Tableau, DeletionTrace)> {
    delete_impl(t, m, true).map(|(t, trace)| (t, trace.expect("trace requested")))
}

fn delete_impl(t: &Tableau, m: u32, trace: bool) -> Result<(Tableau, Option<DeletionTrace>)> {
    let start = t.position_of(m).ok_or(Error::EntryAbsent(m))?;
    let mut rows = t.rows().to_vec();
    let (mut r, mut c) = (start.row - 1, start.col - 1);
    let mut path = trace.then(|| vec![start]);
    loop {
        let right = rows[r].get(c + 1).copied();
        let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
        let (nr, nc) = match (right, below) {
            (None, None) => break,
            (Some(_), None) => (r, c + 1),
            (None, Some(_)) => (r + 1, c),
            (Some(a), Some(b)) => {
                if a < b {
                    (r, c + 1)
                } else {
                    (r + 1, c)
                }
            }
        };
        rows[r][c] = rows[nr][nc];
        r = nr;
        c = nc;
        if let Some(p) = path.as_mut() {
            p.push(CellCoord::new(r + 1, c + 1));
        }
    }
    rows[r].pop();
    if rows[r].is_empty() {
        rows.pop();
    }
    for v in rows.iter_mut().flatten() {
        if *v > m {
            *v -= 1;
        }
    }
    let out = Tableau::from_parts_unchecked(rows, t.alphabet_max() - 1);
    let trace = path.map(|slide_path| DeletionTrace {
        deleted_entry: m,
        slide_path,
        terminal_corner: CellCoord::new(r + 1, c + 1),
    });
    Ok((out, trace))
}

/// `R_[d,n] T`: keep only the entries below `d`.
///
/// Every removed entry is the running maximum, which sits at an outer corner,
/// so no slides are needed.
pub fn remove_top_range(t: &Tableau, d: u32) -> Result<Tableau> {
    let n = t.size() as u32;
    if !t.is_dense() || d == 0 || d > n + 1 {
        return Err(Error::RangeInvalid { d, max: n + 1 });
    }
    let rows: Vec<Vec<u32>> = t
        .rows()
        .iter()
        .map(|row| row.iter().copied().filter(|&v| v < d).collect::<Vec<_>>())
        .filter(|row| !row.is_empty())
        .collect();
    let out = Tableau::from_parts_unchecked(rows, d - 1);
    debug_assert_eq!(out, {
        let mut s = t.clone();
        for top in (d..=n).rev() {
            s = jdt_delete(&s, top).expect("maximum is present");
        }
        s
    });
    Ok(out)
}

/// Dual promotion: delete 1, then put `n` into the corner the slide vacated.
pub fn dual_promotion(t: &Tableau) -> Result<Tableau> {
    if !t.is_dense() || t.size() == 0 {
        return Err(Error::PreconditionUnmet("dual promotion needs a dense nonempty tableau".into()));
    }
    let n = t.size() as u32;
    let (minus_one, trace) = jdt_delete_traced(t, 1)?;
    let mut rows = minus_one.into_rows();
    let corner = trace.terminal_corner;
    if corner.row > rows.len() {
        rows.push(vec![n]);
    } else {
        rows[corner.row - 1].push(n);
    }
    Ok(Tableau::from_parts_unchecked(rows, n))
}

/// Promotion, the inverse of [`dual_promotion`]: remove `n`, slide the gap
/// back to the top-left corner pulling in the larger of the up/left
/// neighbours, increment everything and write 1 into the corner.
pub fn promotion(t: &Tableau) -> Result<Tableau> {
    if !t.is_dense() || t.size() == 0 {
        return Err(Error::PreconditionUnmet("promotion needs a dense nonempty tableau".into()));
    }
    let n = t.size() as u32;
    let start = t.position_of(n).expect("dense tableau holds n");
    let mut rows = t.rows().to_vec();
    let (mut r, mut c) = (start.row - 1, start.col - 1);
    while r > 0 || c > 0 {
        let up = (r > 0).then(|| rows[r - 1][c]);
        let left = (c > 0).then(|| rows[r][c - 1]);
        let (nr, nc) = match (up, left) {
            (Some(u), Some(l)) => {
                if u > l {
                    (r - 1, c)
                } else {
                    (r, c - 1)
                }
            }
            (Some(_), None) => (r - 1, c),
            (None, Some(_)) => (r, c - 1),
            (None, None) => unreachable!("gap is not at the origin"),
        };
        rows[r][c] = rows[nr][nc];
        r = nr;
        c = nc;
    }
    for v in rows.iter_mut().flatten() {
        *v += 1;
    }
    rows[0][0] = 1;
    Ok(Tableau::from_parts_unchecked(rows, n))
}
