use thiserror::Error;

/// Errors raised by the library. Searches report budget exhaustion separately
/// from genuine failures so callers can tell "not found yet" from "invalid".
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid surface: {0}")]
    Surface(String),
    #[error("invalid word: {0}")]
    Word(String),
    #[error("invalid arc system: {0}")]
    ArcSystem(String),
    #[error("invalid contact cut system: {0}")]
    CutSystem(String),
    #[error("invalid slide: {0}")]
    Slide(String),
    #[error("inessential twist curve")]
    InessentialTwist,
    #[error("search budget of {0} vertices exhausted")]
    BudgetExhausted(usize),
    #[error("invalid path at edge {index}: {reason}")]
    Path { index: usize, reason: String },
    #[error("not allowable: cycle {} is null-homologous", .0 + 1)]
    NotAllowable(usize),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
