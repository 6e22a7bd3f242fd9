//! Exhaustive checks over all of `YT(n)`.
//!
//! A sweep computes the minors of every tableau of size `n` and groups the
//! tableaux whose minors coincide. Reports are deterministic: enumeration
//! order is fixed, classes are built by a single-threaded reducer, and every
//! list is sorted by canonical key, so the worker count never shows up in
//! the output (apart from the elapsed time).

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::minors::{apply_remove_range, minor_multiset, minor_set, minor_set_with, CanonicalKey, DeleteFn};
use crate::tableau::{enumerate_syt, Tableau};
use crate::taquin::{dual_promotion, jdt_delete, promotion, remove_top_range};
use crate::{DEFAULT_CEILING, HARD_CEILING};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepMode {
    Set,
    Multiset,
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Set => "set",
            Self::Multiset => "multiset",
        })
    }
}

impl FromStr for SweepMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "set" => Ok(Self::Set),
            "multiset" => Ok(Self::Multiset),
            _ => Err(format!("unknown mode {s:?}, expected set or multiset")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest `n` a sweep accepts; never above [`HARD_CEILING`].
    pub ceiling: usize,
    /// Worker threads; `None` uses rayon's global pool.
    pub jobs: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { ceiling: DEFAULT_CEILING, jobs: None }
    }
}

impl SweepConfig {
    pub fn with_ceiling(ceiling: usize) -> Result<Self> {
        if ceiling > HARD_CEILING {
            return Err(Error::CeilingExceeded { n: ceiling, ceiling: HARD_CEILING });
        }
        Ok(Self { ceiling, ..Self::default() })
    }

    fn admit(&self, n: usize) -> Result<()> {
        let ceiling = self.ceiling.min(HARD_CEILING);
        if n > ceiling {
            return Err(Error::CeilingExceeded { n, ceiling });
        }
        Ok(())
    }

    fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R> {
        match self.jobs {
            None => Ok(f()),
            Some(jobs) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs.max(1))
                    .build()
                    .map_err(|e| Error::PreconditionUnmet(format!("cannot start worker pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}

/// Sorted `(key, multiplicity)` pairs; multiplicities are 1 in set mode.
pub type Fingerprint = Vec<(CanonicalKey, u64)>;

pub fn fingerprint(t: &Tableau, k: usize, mode: SweepMode) -> Result<Fingerprint> {
    Ok(match mode {
        SweepMode::Set => minor_set(t, k)?.keys().map(|key| (key.clone(), 1)).collect(),
        SweepMode::Multiset => minor_multiset(t, k)?.keyed().map(|(key, c)| (key.clone(), c)).collect(),
    })
}

fn digest(fp: &Fingerprint) -> u64 {
    let mut h = DefaultHasher::new();
    fp.hash(&mut h);
    h.finish()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub n: usize,
    pub k: usize,
    pub mode: SweepMode,
    pub total: usize,
    pub injective: bool,
    /// Tableaux sharing their minors, each class sorted, classes sorted.
    pub collision_classes: Vec<Vec<CanonicalKey>>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "mode": self.mode.to_string(),
            "total": self.total,
            "injective": self.injective,
            "collisions": classes_json(&self.collision_classes),
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }
}

fn classes_json(classes: &[Vec<CanonicalKey>]) -> Value {
    classes.iter().map(|c| c.iter().map(CanonicalKey::as_str).collect::<Vec<_>>()).collect()
}

/// Groups all of `YT(n)` by `k`-minor set or multiset.
pub fn injectivity_sweep(n: usize, k: usize, mode: SweepMode, config: &SweepConfig) -> Result<SweepReport> {
    if k == 0 || k >= n {
        return Err(Error::KTooLarge { k, n });
    }
    config.admit(n)?;
    let start = Instant::now();
    let tableaux: Vec<Tableau> = enumerate_syt(n).collect();
    let digests = config.run(|| {
        tableaux.par_iter().map(|t| fingerprint(t, k, mode).map(|fp| digest(&fp))).collect::<Result<Vec<u64>>>()
    })??;

    let mut order: Vec<usize> = (0..tableaux.len()).collect();
    order.sort_by_key(|&i| (digests[i], i));
    let mut classes = Vec::new();
    for group in order.chunk_by(|&a, &b| digests[a] == digests[b]) {
        if group.len() < 2 {
            continue;
        }
        // Equal digests only suggest equal minors; compare in full.
        let mut by_print: BTreeMap<Fingerprint, Vec<CanonicalKey>> = BTreeMap::new();
        for &i in group {
            by_print.entry(fingerprint(&tableaux[i], k, mode)?).or_default().push(tableaux[i].key());
        }
        for mut class in by_print.into_values().filter(|c| c.len() > 1) {
            class.sort();
            classes.push(class);
        }
    }
    classes.sort();
    Ok(SweepReport {
        n,
        k,
        mode,
        total: tableaux.len(),
        injective: classes.is_empty(),
        collision_classes: classes,
        elapsed: start.elapsed(),
    })
}

/// True when every tableau of the class has the same minors.
pub fn verify_certificate(class: &[CanonicalKey], k: usize, mode: SweepMode) -> Result<bool> {
    let prints = class.iter().map(|key| fingerprint(&key.decode()?, k, mode)).collect::<Result<Vec<_>>>()?;
    Ok(class.len() >= 2 && prints.windows(2).all(|w| w[0] == w[1]))
}

/// Equal multisets force equal sets, so every multiset collision class must
/// sit inside a set collision class at the same `(n, k)`.
pub fn check_set_implies_multiset(set: &SweepReport, multiset: &SweepReport) -> Result<()> {
    if set.mode != SweepMode::Set || multiset.mode != SweepMode::Multiset || (set.n, set.k) != (multiset.n, multiset.k)
    {
        return Err(Error::PreconditionUnmet("need a set and a multiset sweep at the same (n, k)".into()));
    }
    for class in &multiset.collision_classes {
        let covered = set.collision_classes.iter().any(|s| class.iter().all(|key| s.binary_search(key).is_ok()));
        if !covered {
            return Err(Error::IdentityViolated {
                identity: "multiset collisions refine set collisions".into(),
                witness: class.iter().map(CanonicalKey::as_str).collect::<Vec<_>>().join(" | "),
            });
        }
    }
    Ok(())
}

/// Runs sweeps and cross-checks every set/multiset pair at the same `(n, k)`.
#[derive(Debug, Default)]
pub struct Harness {
    pub config: SweepConfig,
    reports: Vec<SweepReport>,
}

impl Harness {
    pub fn new(config: SweepConfig) -> Self {
        Self { config, reports: Vec::new() }
    }

    pub fn sweep(&mut self, n: usize, k: usize, mode: SweepMode) -> Result<SweepReport> {
        let report = injectivity_sweep(n, k, mode, &self.config)?;
        for other in self.reports.iter().filter(|r| (r.n, r.k) == (n, k) && r.mode != mode) {
            match mode {
                SweepMode::Set => check_set_implies_multiset(&report, other)?,
                SweepMode::Multiset => check_set_implies_multiset(other, &report)?,
            }
        }
        self.reports.push(report.clone());
        Ok(report)
    }

    pub fn reports(&self) -> &[SweepReport] {
        &self.reports
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdentityReport {
    pub n_max: usize,
    pub tableaux: usize,
    pub promotion_checks: usize,
    pub removal_checks: usize,
}

/// Checks the promotion identities and the minor/removal commutation for
/// every tableau of size at most `n_max`.
pub fn check_identities(n_max: usize) -> Result<IdentityReport> {
    check_identities_with(n_max, &jdt_delete)
}

/// [`check_identities`] with the deletion rule swapped out, so that a broken
/// rule can be shown to trip the checks.
pub fn check_identities_with(n_max: usize, delete: DeleteFn<'_>) -> Result<IdentityReport> {
    if n_max > 9 {
        return Err(Error::PreconditionUnmet(format!("identity checks stop at n = 9, asked for {n_max}")));
    }
    let mut report = IdentityReport { n_max, ..Default::default() };
    for n in 1..=n_max {
        let tableaux: Vec<Tableau> = enumerate_syt(n).collect();
        let counts = tableaux.par_iter().map(|t| check_one(t, n, delete)).collect::<Result<Vec<(usize, usize)>>>()?;
        report.tableaux += tableaux.len();
        for (p, r) in counts {
            report.promotion_checks += p;
            report.removal_checks += r;
        }
    }
    Ok(report)
}

fn check_one(t: &Tableau, n: usize, delete: DeleteFn<'_>) -> Result<(usize, usize)> {
    let violated = |identity: &str| Error::IdentityViolated { identity: identity.into(), witness: t.key().to_string() };
    let dual = dual_promotion(t)?;
    if promotion(&dual)? != *t {
        return Err(violated("promotion undoes dual promotion"));
    }
    if dual_promotion(&promotion(t)?)? != *t {
        return Err(violated("dual promotion undoes promotion"));
    }
    if remove_top_range(&dual, n as u32)? != delete(t, 1)? {
        return Err(violated("T - 1 is dual promotion with n removed"));
    }
    let mut removal = 0;
    for k in 1..=2usize.min(n - 1) {
        let minors = minor_set_with(t, k, delete)?;
        for d in k + 1..=n {
            let left = minor_set_with(&remove_top_range(t, d as u32)?, k, delete)?;
            let right = apply_remove_range(&minors, (d - k) as u32)?;
            if left != right {
                return Err(violated(&format!("minors commute with removing [{d}, {n}] at k = {k}")));
            }
            removal += 1;
        }
    }
    Ok((3, removal))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureId {
    /// Multiset minors determine `T` once `n >= k + 4`.
    KPlus4,
    /// Set minors determine `T` once `n >= k^2 + 2k`.
    K2Plus2k,
}

impl ConjectureId {
    pub fn name(self) -> &'static str {
        match self {
            Self::KPlus4 => "k_plus_4",
            Self::K2Plus2k => "k2_plus_2k",
        }
    }

    pub fn mode(self) -> SweepMode {
        match self {
            Self::KPlus4 => SweepMode::Multiset,
            Self::K2Plus2k => SweepMode::Set,
        }
    }

    /// First `n` the conjecture speaks about.
    pub fn threshold(self, k: usize) -> usize {
        match self {
            Self::KPlus4 => k + 4,
            Self::K2Plus2k => k * k + 2 * k,
        }
    }

    /// Three sizes from the threshold on, cut at the ceiling.
    pub fn default_range(self, k: usize, ceiling: usize) -> Vec<usize> {
        let lo = self.threshold(k);
        (lo..=(lo + 2).min(ceiling)).collect()
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "k_plus_4" => Ok(Self::KPlus4),
            "k2_plus_2k" => Ok(Self::K2Plus2k),
            _ => Err(format!("unknown conjecture {s:?}, expected k_plus_4 or k2_plus_2k")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub n: usize,
    pub holds: bool,
    /// Collision certificates when the conjecture fails at `n`.
    pub collisions: Vec<Vec<CanonicalKey>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub conjecture: ConjectureId,
    pub k: usize,
    pub n_values: Vec<usize>,
    pub verdicts: Vec<Verdict>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "conjecture": self.conjecture.name(),
            "k": self.k,
            "n_values": self.n_values,
            "verdicts": self.verdicts.iter().map(|v| json!({
                "n": v.n,
                "holds": v.holds,
                "collisions": classes_json(&v.collisions),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Sweeps each requested size; a verdict "holds" only after a complete
/// sweep found no collision.
pub fn verify_conjecture(
    which: ConjectureId,
    k: usize,
    n_values: &[usize],
    config: &SweepConfig,
) -> Result<ConjectureReport> {
    for &n in n_values {
        if n <= k {
            return Err(Error::KTooLarge { k, n });
        }
        config.admit(n)?;
    }
    let mut verdicts = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let report = injectivity_sweep(n, k, which.mode(), config)?;
        verdicts.push(Verdict { n, holds: report.injective, collisions: report.collision_classes });
    }
    Ok(ConjectureReport { conjecture: which, k, n_values: n_values.to_vec(), verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(s: &str) -> CanonicalKey {
        crate::minors::canonical_decode(s).unwrap().key()
    }

    #[test]
    fn seven_cell_collision_class() {
        let r = injectivity_sweep(7, 2, SweepMode::Set, &SweepConfig::default()).unwrap();
        assert!(!r.injective);
        let pair = [key("1 2 5 7/3 4 6"), key("1 3 5 7/2 4 6")];
        assert!(r.collision_classes.iter().any(|c| pair.iter().all(|k| c.contains(k))));
        for class in &r.collision_classes {
            assert!(verify_certificate(class, 2, SweepMode::Set).unwrap());
        }
    }

    #[test]
    fn sweeps_ignore_worker_count() {
        let one = SweepConfig { jobs: Some(1), ..Default::default() };
        let four = SweepConfig { jobs: Some(4), ..Default::default() };
        for mode in [SweepMode::Set, SweepMode::Multiset] {
            let mut a = injectivity_sweep(6, 2, mode, &one).unwrap();
            let mut b = injectivity_sweep(6, 2, mode, &four).unwrap();
            a.elapsed = Duration::ZERO;
            b.elapsed = Duration::ZERO;
            assert_eq!(a, b);
            assert_eq!(a.to_json().to_string(), b.to_json().to_string());
        }
    }

    #[test]
    fn json_keys_are_sorted() {
        let r = injectivity_sweep(4, 1, SweepMode::Set, &SweepConfig::default()).unwrap();
        let text = r.to_json().to_string();
        let order = ["collisions", "elapsed_ms", "injective", "\"k\"", "mode", "\"n\"", "total"];
        let positions: Vec<usize> = order.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
    }

    #[test]
    fn ceiling_is_enforced() {
        let cfg = SweepConfig::default();
        assert_eq!(
            injectivity_sweep(11, 2, SweepMode::Set, &cfg).unwrap_err(),
            Error::CeilingExceeded { n: 11, ceiling: 10 }
        );
        assert!(SweepConfig::with_ceiling(13).is_err());
        assert!(SweepConfig::with_ceiling(12).is_ok());
    }

    #[test]
    fn harness_cross_checks_pairs() {
        let mut h = Harness::default();
        for n in 4..=6 {
            h.sweep(n, 2, SweepMode::Set).unwrap();
            h.sweep(n, 2, SweepMode::Multiset).unwrap();
        }
        assert_eq!(h.reports().len(), 6);
    }

    #[test]
    fn refinement_check_catches_a_stray_class() {
        let set = injectivity_sweep(6, 2, SweepMode::Set, &SweepConfig::default()).unwrap();
        let mut multi = injectivity_sweep(6, 2, SweepMode::Multiset, &SweepConfig::default()).unwrap();
        multi.collision_classes = vec![vec![key("1 2 3 4 5 6"), key("1/2/3/4/5/6")]];
        assert!(matches!(check_set_implies_multiset(&set, &multi), Err(Error::IdentityViolated { .. })));
    }

    #[test]
    fn identities_small() {
        let r = check_identities(6).unwrap();
        assert_eq!(r.tableaux, 1 + 2 + 4 + 10 + 26 + 76);
        assert_eq!(check_identities(1).unwrap().removal_checks, 0);
        assert!(check_identities(10).is_err());
    }

    #[test]
    fn broken_deletion_rule_is_caught() {
        // Deletes 3 whenever 1 is asked for. (Swapping in 2 would go unnoticed:
        // T - 1 and T - 2 always coincide.)
        let broken = |t: &Tableau, m: u32| jdt_delete(t, if m == 1 && t.size() >= 3 { 3 } else { m });
        match check_identities_with(5, &broken) {
            Err(Error::IdentityViolated { witness, .. }) => assert!(!witness.is_empty()),
            other => panic!("expected a violation, got {other:?}"),
        }
    }

    #[test]
    fn conjecture_ranges() {
        assert_eq!(ConjectureId::KPlus4.default_range(3, 9), vec![7, 8, 9]);
        assert_eq!(ConjectureId::KPlus4.default_range(5, 10), vec![9, 10]);
        assert_eq!(ConjectureId::K2Plus2k.default_range(2, 10), vec![8, 9, 10]);
        assert_eq!("k_plus_4".parse::<ConjectureId>().unwrap(), ConjectureId::KPlus4);
    }

    #[test]
    fn small_conjecture_run() {
        let r = verify_conjecture(ConjectureId::KPlus4, 1, &[5, 6], &SweepConfig::default()).unwrap();
        assert!(r.holds());
        assert_eq!(r.to_json()["conjecture"], "k_plus_4");
    }
}
