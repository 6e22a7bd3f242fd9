use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition, ShapeSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeRecovery {
    Unique(Partition),
    /// Every partition with the observed containment set.
    Ambiguous(Vec<Partition>),
}

/// Finds the partitions `λ` of `n` whose size-`(n-k)` sub-shapes are exactly
/// `minor_shapes`, by trying every partition of `n`.
pub fn recover_shape(minor_shapes: &ShapeSet, n: usize, k: usize) -> Result<ShapeRecovery> {
    if k > n {
        return Err(Error::KTooLarge { k, n });
    }
    if let Some(bad) = minor_shapes.iter().find(|p| p.size() != n - k) {
        return Err(Error::PreconditionUnmet(format!("shape {bad} has size {}, expected {}", bad.size(), n - k)));
    }
    let mut found: Vec<Partition> = partitions_of(n)
        .into_iter()
        .filter(|lambda| {
            // Cheap rejection before building the full containment set.
            minor_shapes.iter().all(|mu| lambda.contains(mu))
                && lambda.contained_partitions(n - k).is_ok_and(|c| c == *minor_shapes)
        })
        .collect();
    found.sort();
    match found.len() {
        0 => Err(Error::NoCandidate { n }),
        1 => Ok(ShapeRecovery::Unique(found.pop().expect("one candidate"))),
        _ => Ok(ShapeRecovery::Ambiguous(found)),
    }
}

pub(crate) fn unique_shape(minor_shapes: &ShapeSet, n: usize, k: usize) -> Result<Partition> {
    match recover_shape(minor_shapes, n, k)? {
        ShapeRecovery::Unique(p) => Ok(p),
        ShapeRecovery::Ambiguous(v) => Err(Error::ShapeAmbiguous { n, count: v.len() }),
    }
}

/// Sufficient condition for the minor shapes to pin down the shape: `n` is
/// not of the form `(a+1)b + c - 1` with `a <= c <= k` and
/// `b + (c mod a) <= k`, over positive integers.
pub fn monks_shape_guarantee(n: usize, k: usize) -> bool {
    for a in 1..=k {
        for c in a..=k {
            for b in 1..=k {
                if b + c % a > k {
                    continue;
                }
                if (a + 1) * b + c - 1 == n {
                    return false;
                }
            }
        }
    }
    true
}
