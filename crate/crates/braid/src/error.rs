use thiserror::Error;

/// Errors produced by braid-word operations and the derived pipelines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("not strictly positive: {0}")]
    NotStrictlyPositive(String),

    #[error("split closure: {0}")]
    Split(String),

    #[error("search budget exhausted after depth {budget}")]
    BudgetExhausted { budget: usize },

    #[error("word too long for exhaustive search: length {len} exceeds {max}")]
    TooLong { len: usize, max: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
