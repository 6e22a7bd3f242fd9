use thiserror::Error;

use crate::partition::CellCoord;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row lengths {0:?} are not a weakly decreasing sequence of positive integers")]
    InvalidPartition(Vec<usize>),

    #[error("shape has {expected} cells but {found} entries were given")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("filling is not standard: {0}")]
    NotStandard(String),

    #[error("entry {entry} lies outside the alphabet [1, {alphabet_max}]")]
    AlphabetViolation { entry: u32, alphabet_max: u32 },

    #[error("operation requires a nonempty shape")]
    EmptyShape,

    #[error("cell {0} is not inside the shape")]
    InvalidCoord(CellCoord),

    #[error("size {m} is outside [0, {size}]")]
    SizeOutOfRange { m: usize, size: usize },

    #[error("entry {0} does not occur in the tableau")]
    EntryAbsent(u32),

    #[error("removal bound {d} is outside [1, {max}]")]
    RangeInvalid { d: u32, max: u32 },

    #[error("k = {k} must be smaller than the tableau size {n}")]
    KTooLarge { k: usize, n: usize },

    #[error("malformed canonical key {0:?}")]
    MalformedKey(String),

    #[error("minor tableaux must all have size {expected}, found size {found}")]
    MixedMinorSizes { expected: usize, found: usize },

    #[error("no partition of {n} has the given containment set")]
    NoCandidate { n: usize },

    #[error("shape of size {n} is not determined: {count} candidate partitions")]
    ShapeAmbiguous { n: usize, count: usize },

    #[error("consecutive recovered shapes do not differ by a single outer corner (entry {entry})")]
    InconsistentDiff { entry: u32 },

    #[error("minors are inconsistent: {0}")]
    InconsistentMinors(String),

    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    #[error("no minor keeps outer corner {0} alive")]
    NoSurvivingMinor(CellCoord),

    #[error("size {n} exceeds the configured ceiling {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },

    #[error("identity `{identity}` violated at {witness}")]
    IdentityViolated { identity: String, witness: String },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
