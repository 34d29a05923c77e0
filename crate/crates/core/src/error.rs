use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("superdimension must have m >= 1 and n >= 1, got ({m}|{n})")]
    InvalidSuperdim { m: usize, n: usize },

    #[error("not a permutation of 1..={len}: {images:?}")]
    InvalidPermutation { len: usize, images: Vec<usize> },

    #[error("dimension mismatch: expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("weight {0} is not integral")]
    NonIntegralWeight(String),

    #[error("pairing {0} is not an integer")]
    NonIntegralPairing(String),

    #[error("root must be even: {0}")]
    OddRoot(String),

    #[error("root must be odd: {0}")]
    EvenRoot(String),

    #[error("no simple root at position {position} (system has {count})")]
    NotSimple { position: usize, count: usize },

    #[error("permutation {0} does not preserve the even and odd blocks")]
    NotBlockPreserving(String),

    #[error("the even part of the system is not the standard one (w0 = {0})")]
    NonStandardEvenPart(String),

    #[error("{0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),

    #[error("inexact division in the character ring")]
    InexactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operation requires GL({expected_m}|{expected_n}), got GL({m}|{n})")]
    WrongGroup {
        expected_m: usize,
        expected_n: usize,
        m: usize,
        n: usize,
    },

    #[error("operation requires one of the systems {expected}, got w = {actual}")]
    WrongSystem { expected: String, actual: String },

    #[error("parse error: {0}")]
    Parse(String),

    /// An internal identity that must hold by construction failed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_invariant(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
