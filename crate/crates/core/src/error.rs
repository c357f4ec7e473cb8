use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {parts:?}: parts must be positive and non-increasing")]
    InvalidPartition { parts: Vec<u64> },

    #[error("{s} and {t} are not coprime")]
    NotCoprime { s: u64, t: u64 },

    #[error("beta-set label {0} appears more than once")]
    RepeatedLabel(u64),

    #[error("poset has {0} elements; ideal enumeration supports at most 128")]
    PosetTooLarge(usize),

    #[error("umbral image of q^{e_q} t^{e_t} has a negative exponent")]
    NegativeExponent { e_q: u64, e_t: u64 },

    #[error("negative coefficient {coeff} at q^{exponent}")]
    NegativeCoefficient { exponent: u64, coeff: String },

    #[error("enumerator for {what} has total {total}, exceeding the 64-bit coefficient range")]
    CoefficientBound { what: String, total: String },

    #[error(
        "weight-forgetting check failed for {what}: coefficients sum to {got}, count is {expected}"
    )]
    CountMismatch {
        what: String,
        expected: String,
        got: String,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("cache file {path:?} is corrupt: {source}")]
    CacheCorrupt {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    #[error("need at least {need} interpolation points, got {got}")]
    TooFewPoints { need: usize, got: usize },

    #[error("interpolation node n={0} appears twice")]
    DuplicateNode(u64),

    #[error("held-out point n={n}: data {expected}, polynomial gives {fitted}")]
    HeldOutMismatch {
        n: u64,
        expected: String,
        fitted: String,
    },

    #[error("moment order {0} is outside 1..=7")]
    MomentOrder(u32),

    #[error("moment polynomial of order {k} has degree {found}, expected {expected}")]
    DegreeMismatch {
        k: u32,
        expected: usize,
        found: usize,
    },

    #[error("square root of negative value {0}")]
    NegativeRadicand(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
