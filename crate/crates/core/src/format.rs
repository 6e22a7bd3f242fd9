//! Plain-text formats.
//!
//! A tableau is written one row per line, entries separated by single
//! spaces, top row first. Several tableaux are separated by one blank line.
//! In a multiset file each block starts with a line `count: <c>`. A
//! reconstruction result is its status word, a blank line, then the
//! tableau blocks. A shapes file has one partition per line, parts
//! separated by spaces.

use crate::error::{Error, Result};
use crate::minors::{MinorMultiset, MinorSet};
use crate::partition::{Partition, ShapeSet};
use crate::reconstruct::ReconstructionResult;
use crate::tableau::Tableau;

/// A block of consecutive non-blank lines with the 1-based number of its
/// first line.
struct Block<'a> {
    first_line: usize,
    lines: Vec<&'a str>,
}

fn blocks(text: &str) -> Vec<Block<'_>> {
    let mut out = Vec::new();
    let mut current: Option<Block> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            out.extend(current.take());
        } else {
            current.get_or_insert_with(|| Block { first_line: i + 1, lines: Vec::new() }).lines.push(line);
        }
    }
    out.extend(current);
    out
}

fn parse_numbers<T: std::str::FromStr>(line: &str, line_no: usize) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::Parse { line: line_no, message: format!("not a nonnegative integer: {tok:?}") })
        })
        .collect()
}

fn parse_rows(lines: &[&str], first_line: usize) -> Result<Tableau> {
    let rows =
        lines.iter().enumerate().map(|(i, l)| parse_numbers::<u32>(l, first_line + i)).collect::<Result<Vec<_>>>()?;
    Tableau::from_rows(rows).map_err(|e| Error::Parse { line: first_line, message: e.to_string() })
}

pub fn parse_tableau(text: &str) -> Result<Tableau> {
    let mut all = parse_tableaux(text)?;
    match all.len() {
        1 => Ok(all.pop().expect("one tableau")),
        n => Err(Error::Parse { line: 1, message: format!("expected one tableau, found {n}") }),
    }
}

pub fn parse_tableaux(text: &str) -> Result<Vec<Tableau>> {
    blocks(text).iter().map(|b| parse_rows(&b.lines, b.first_line)).collect()
}

pub fn write_tableaux<'a, I: IntoIterator<Item = &'a Tableau>>(tableaux: I) -> String {
    tableaux.into_iter().map(|t| format!("{t}\n")).collect::<Vec<_>>().join("\n")
}

/// Contents of a minors file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorFile {
    Set(MinorSet),
    Multiset(MinorMultiset),
}

impl MinorFile {
    pub fn n_minor(&self) -> usize {
        match self {
            Self::Set(s) => s.n_minor(),
            Self::Multiset(m) => m.n_minor(),
        }
    }

    /// The distinct minors, forgetting multiplicities.
    pub fn into_set(self) -> MinorSet {
        match self {
            Self::Set(s) => s,
            Self::Multiset(m) => m.support(),
        }
    }
}

/// Reads a minor set or, when blocks carry `count:` lines, a multiset.
pub fn parse_minor_file(text: &str) -> Result<MinorFile> {
    let blocks = blocks(text);
    let counted = blocks.iter().filter(|b| b.lines[0].starts_with("count:")).count();
    if counted == 0 {
        let ts = blocks.iter().map(|b| parse_rows(&b.lines, b.first_line)).collect::<Result<Vec<_>>>()?;
        return Ok(MinorFile::Set(MinorSet::from_tableaux(ts)?));
    }
    if counted != blocks.len() {
        return Err(Error::Parse { line: 1, message: "either every block or none carries a count line".into() });
    }
    let mut items = Vec::new();
    for b in &blocks {
        let value = b.lines[0]["count:".len()..].trim();
        let count: u64 =
            value.parse().map_err(|_| Error::Parse { line: b.first_line, message: format!("bad count {value:?}") })?;
        if b.lines.len() < 2 {
            return Err(Error::Parse { line: b.first_line, message: "count line without a tableau".into() });
        }
        items.push((parse_rows(&b.lines[1..], b.first_line + 1)?, count));
    }
    Ok(MinorFile::Multiset(MinorMultiset::from_counts(items)?))
}

pub fn write_minor_set(s: &MinorSet) -> String {
    write_tableaux(s.iter())
}

pub fn write_minor_multiset(ms: &MinorMultiset) -> String {
    ms.iter().map(|(t, c)| format!("count: {c}\n{t}\n")).collect::<Vec<_>>().join("\n")
}

pub fn write_result(r: &ReconstructionResult) -> String {
    let body = write_tableaux(r.tableaux());
    if body.is_empty() {
        format!("{}\n", r.status())
    } else {
        format!("{}\n\n{body}", r.status())
    }
}

pub fn parse_result(text: &str) -> Result<ReconstructionResult> {
    let blocks = blocks(text);
    let Some((head, rest)) = blocks.split_first() else {
        return Err(Error::Parse { line: 1, message: "empty input".into() });
    };
    if head.lines.len() != 1 {
        return Err(Error::Parse { line: head.first_line, message: "status must stand alone".into() });
    }
    let tableaux = rest.iter().map(|b| parse_rows(&b.lines, b.first_line)).collect::<Result<Vec<_>>>()?;
    let bad = |message: &str| Err(Error::Parse { line: head.first_line, message: message.into() });
    match (head.lines[0], tableaux.len()) {
        ("unique", 1) => Ok(ReconstructionResult::Unique(tableaux.into_iter().next().expect("one"))),
        ("ambiguous", n) if n >= 2 => Ok(ReconstructionResult::Ambiguous(tableaux)),
        ("inconsistent", 0) => Ok(ReconstructionResult::Inconsistent),
        ("unique" | "ambiguous" | "inconsistent", _) => bad("wrong number of tableaux for status"),
        _ => bad("unknown status"),
    }
}

pub fn parse_shapes(text: &str) -> Result<ShapeSet> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let rows = parse_numbers::<usize>(l, i + 1)?;
            Partition::new(rows).map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })
        })
        .collect()
}

pub fn write_shapes(shapes: &ShapeSet) -> String {
    shapes.iter().map(|p| p.rows().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ") + "\n").collect()
}
