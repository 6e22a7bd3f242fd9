//! Jeu de taquin minors of standard Young tableaux.
//!
//! A k-minor of a tableau `T` is what remains after `k` successive jeu de
//! taquin deletions. This crate computes minor sets and multisets, recovers
//! `T` from them where that is possible, and runs the exhaustive sweeps that
//! show where it is not.
//!
//! ```
//! use syt_core::{minor_set, reconstruct_from_minors, Tableau};
//!
//! let t = Tableau::from_rows(vec![vec![1, 3, 4], vec![2, 5]]).unwrap();
//! let s = minor_set(&t, 1).unwrap();
//! let r = reconstruct_from_minors(&s, 5, 1).unwrap();
//! assert_eq!(r.unique(), Some(&t));
//! ```

pub mod error;
pub mod format;
pub mod minors;
pub mod partition;
pub mod reconstruct;
pub mod tableau;
pub mod taquin;
pub mod verify;

pub use error::{Error, Result};
pub use minors::{
    apply_remove_range, canonical_decode, canonical_encode, minor_multiset, minor_set, minor_set_with, CanonicalKey,
    MinorMultiset, MinorSet,
};
pub use partition::{partitions_of, CellCoord, Partition, ShapeSet};
pub use reconstruct::{reconstruct_from_minors, ReconstructionResult};
pub use tableau::{count_syt, enumerate_shape, enumerate_syt, Tableau};
pub use taquin::{dual_promotion, jdt_delete, jdt_delete_traced, promotion, remove_top_range, DeletionTrace};

/// Largest size swept unless configured otherwise.
pub const DEFAULT_CEILING: usize = 10;

/// Sizes above this are refused outright.
pub const HARD_CEILING: usize = 12;
