use num_bigint::BigUint;
use serde::Serialize;

/// Thresholds above which multisets of k-minors determine the tableau.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub k: usize,
    /// Smallest `n` with `2 C(n - k^2 - 2k, k) > C(n, k)`.
    pub eq41_min_n: usize,
    /// `k^2 + 3k - 1 + (k^2 + 2k) / (2^(1/k) - 1)`; sufficient when `n` exceeds it.
    pub closed_form_bound: f64,
    /// Cubic upper estimate of `closed_form_bound`.
    pub cubic_bound: f64,
}

/// `C(a, k)`, zero when `a < k`.
pub fn binomial(a: usize, k: usize) -> BigUint {
    if k > a {
        return BigUint::from(0u32);
    }
    let k = k.min(a - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    acc
}

/// Whether `2 C(n - k^2 - 2k, k) > C(n, k)`.
pub fn majority_bound_holds(n: usize, k: usize) -> bool {
    let shift = k * k + 2 * k;
    let lhs = match n.checked_sub(shift) {
        Some(a) => binomial(a, k) * 2u32,
        None => BigUint::from(0u32),
    };
    lhs > binomial(n, k)
}

pub fn bound_report(k: usize) -> BoundReport {
    assert!(k >= 1, "bounds are defined for k >= 1");
    let mut n = k + 1;
    while !majority_bound_holds(n, k) {
        n += 1;
    }
    let kf = k as f64;
    let ln2 = std::f64::consts::LN_2;
    let closed_form_bound = kf * kf + 3.0 * kf - 1.0 + (kf * kf + 2.0 * kf) / (2f64.powf(1.0 / kf) - 1.0);
    let cubic_bound = (kf.powi(3) + 2.0 * kf * kf) / ln2 + kf * kf / 2.0 + 2.0 * kf - 1.0 + ln2 / 12.0 * (kf + 2.0);
    BoundReport { k, eq41_min_n: n, closed_form_bound, cubic_bound }
}
