use thiserror::Error;

/// Errors produced by the exact-computation engine.
///
/// `NotAtypical`, `NotDominantIntegral`, `NotOddPositiveRoot` and
/// `UnsupportedRoot` signal violated mathematical preconditions;
/// `InternalConsistency` signals that two independent computations of the
/// same quantity disagreed, which is always a bug.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rank mismatch: expected ({0}|{1}), got ({2}|{3})")]
    RankMismatch(usize, usize, usize, usize),

    #[error("missing coordinate for Cartan symbol {0}")]
    MissingCoordinate(usize),

    #[error("{0} is not an odd positive root of {1}")]
    NotOddPositiveRoot(String, String),

    #[error("weight is not atypical for the given root: {relation}")]
    NotAtypical { relation: String },

    #[error("precondition failed: {0}")]
    NotDominantIntegral(String),

    #[error("{0}")]
    UnsupportedRoot(String),

    #[error("bracket closure failure while building {algebra}: {detail}")]
    ClosureFailure { algebra: String, detail: String },

    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
