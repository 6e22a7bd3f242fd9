//! k-minor sets and multisets keyed by canonical tableau encodings.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::ShapeSet;
use crate::tableau::Tableau;
use crate::taquin::{jdt_delete, remove_top_range};

/// Text identity of a tableau: rows joined by `/`, entries by single spaces.
///
/// Keys order lexicographically as strings, which fixes every report order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Parses and validates a key. The empty key is the empty tableau.
    pub fn decode(&self) -> Result<Tableau> {
        canonical_decode(&self.0)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_encode(t: &Tableau) -> CanonicalKey {
    let mut s = String::with_capacity(3 * t.size());
    for (i, row) in t.rows().iter().enumerate() {
        if i > 0 {
            s.push('/');
        }
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                s.push(' ');
            }
            s.push_str(&v.to_string());
        }
    }
    CanonicalKey(s)
}

pub fn canonical_decode(key: &str) -> Result<Tableau> {
    if key.is_empty() {
        return Ok(Tableau::empty());
    }
    let malformed = || Error::MalformedKey(key.to_string());
    let rows = key
        .split('/')
        .map(|row| {
            if row.is_empty() || row.starts_with(' ') || row.ends_with(' ') || row.contains("  ") {
                return Err(malformed());
            }
            row.split(' ').map(|v| v.parse::<u32>().map_err(|_| malformed())).collect()
        })
        .collect::<Result<Vec<Vec<u32>>>>()?;
    Tableau::from_rows(rows)
}

impl Tableau {
    pub fn key(&self) -> CanonicalKey {
        canonical_encode(self)
    }
}

/// Signature of a deletion rule, so identity checks can run against a
/// substitute rule.
pub type DeleteFn<'a> = &'a (dyn Fn(&Tableau, u32) -> Result<Tableau> + Sync);

/// A deduplicated set of minors of one common size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorSet {
    n_minor: usize,
    members: BTreeMap<CanonicalKey, Tableau>,
}

impl MinorSet {
    /// Collects tableaux into a set; all must have the same size. An empty
    /// collection needs its size given explicitly via [`MinorSet::empty`].
    pub fn from_tableaux<I: IntoIterator<Item = Tableau>>(items: I) -> Result<Self> {
        let mut members = BTreeMap::new();
        let mut n_minor = None;
        for t in items {
            let size = t.size();
            match n_minor {
                None => n_minor = Some(size),
                Some(expected) if expected != size => return Err(Error::MixedMinorSizes { expected, found: size }),
                _ => {}
            }
            members.insert(t.key(), t);
        }
        Ok(Self { n_minor: n_minor.unwrap_or(0), members })
    }

    pub fn empty(n_minor: usize) -> Self {
        Self { n_minor, members: BTreeMap::new() }
    }

    pub fn n_minor(&self) -> usize {
        self.n_minor
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        self.members.contains_key(&t.key())
    }

    /// Members in canonical key order.
    pub fn iter(&self) -> impl Iterator<Item = &Tableau> {
        self.members.values()
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.members.keys()
    }

    pub fn shapes(&self) -> ShapeSet {
        self.iter().map(|t| t.shape().clone()).collect()
    }
}

/// Minors counted by the number of ordered deletion sequences producing them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorMultiset {
    n_minor: usize,
    entries: BTreeMap<CanonicalKey, (Tableau, u64)>,
}

impl MinorMultiset {
    pub fn from_counts<I: IntoIterator<Item = (Tableau, u64)>>(items: I) -> Result<Self> {
        let mut entries: BTreeMap<CanonicalKey, (Tableau, u64)> = BTreeMap::new();
        let mut n_minor = None;
        for (t, count) in items {
            let size = t.size();
            match n_minor {
                None => n_minor = Some(size),
                Some(expected) if expected != size => return Err(Error::MixedMinorSizes { expected, found: size }),
                _ => {}
            }
            if count == 0 {
                continue;
            }
            entries.entry(t.key()).or_insert_with(|| (t, 0)).1 += count;
        }
        Ok(Self { n_minor: n_minor.unwrap_or(0), entries })
    }

    pub fn n_minor(&self) -> usize {
        self.n_minor
    }

    /// Number of distinct minors.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().map(|(_, c)| c).sum()
    }

    pub fn count(&self, t: &Tableau) -> u64 {
        self.entries.get(&t.key()).map_or(0, |(_, c)| *c)
    }

    /// `(minor, multiplicity)` in canonical key order.
    pub fn iter(&self) -> impl Iterator<Item = (&Tableau, u64)> {
        self.entries.values().map(|(t, c)| (t, *c))
    }

    pub fn keyed(&self) -> impl Iterator<Item = (&CanonicalKey, u64)> {
        self.entries.iter().map(|(k, (_, c))| (k, *c))
    }

    /// The underlying set of distinct minors.
    pub fn support(&self) -> MinorSet {
        MinorSet {
            n_minor: self.n_minor,
            members: self.entries.iter().map(|(k, (t, _))| (k.clone(), t.clone())).collect(),
        }
    }
}

fn check_k(t: &Tableau, k: usize) -> Result<()> {
    if k >= t.size() {
        return Err(Error::KTooLarge { k, n: t.size() });
    }
    Ok(())
}

/// `M_k(T)`, built one deletion level at a time so shared sub-minors are
/// expanded once.
pub fn minor_set(t: &Tableau, k: usize) -> Result<MinorSet> {
    check_k(t, k)?;
    minor_set_with(t, k, &jdt_delete)
}

/// [`minor_set`] under an arbitrary deletion rule; allows `k == size`.
pub fn minor_set_with(t: &Tableau, k: usize, delete: DeleteFn<'_>) -> Result<MinorSet> {
    if k > t.size() {
        return Err(Error::KTooLarge { k, n: t.size() });
    }
    let mut level: BTreeMap<CanonicalKey, Tableau> = BTreeMap::from([(t.key(), t.clone())]);
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for s in level.values() {
            for r in s.rows() {
                for &m in r {
                    let d = delete(s, m)?;
                    next.entry(d.key()).or_insert(d);
                }
            }
        }
        level = next;
    }
    Ok(MinorSet { n_minor: t.size() - k, members: level })
}

/// `mM_k(T)`: multiplicity equals the number of ordered deletion sequences.
pub fn minor_multiset(t: &Tableau, k: usize) -> Result<MinorMultiset> {
    check_k(t, k)?;
    let mut level: BTreeMap<CanonicalKey, (Tableau, u64)> = BTreeMap::from([(t.key(), (t.clone(), 1))]);
    for _ in 0..k {
        let mut next: BTreeMap<CanonicalKey, (Tableau, u64)> = BTreeMap::new();
        for (s, count) in level.values() {
            for m in s.entries() {
                let d = jdt_delete(s, m)?;
                next.entry(d.key()).or_insert_with(|| (d, 0)).1 += count;
            }
        }
        level = next;
    }
    Ok(MinorMultiset { n_minor: t.size() - k, entries: level })
}

/// `R_[d, n_minor]` applied member-wise, then deduplicated.
pub fn apply_remove_range(s: &MinorSet, d: u32) -> Result<MinorSet> {
    let max = s.n_minor as u32 + 1;
    if d == 0 || d > max {
        return Err(Error::RangeInvalid { d, max });
    }
    let mut members = BTreeMap::new();
    for t in s.iter() {
        let r = remove_top_range(t, d)?;
        members.insert(r.key(), r);
    }
    Ok(MinorSet { n_minor: d as usize - 1, members })
}
