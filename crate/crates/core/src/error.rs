use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("not finite-dimensional within cap: {0}")]
    NotFiniteDimensional(String),
    #[error("non-split simple: change field ({0})")]
    NonSplitSimple(String),
    #[error("non-split endomorphism quotient: enlarge field ({0})")]
    EnlargeField(String),
    #[error("condense first: {0}")]
    CondenseFirst(String),
    #[error("insufficient cap: resolution truncated at {truncated_at}, degree {needed} required")]
    InsufficientCap { truncated_at: usize, needed: usize },
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
