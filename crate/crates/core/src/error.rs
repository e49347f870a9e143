use thiserror::Error;

/// Errors raised across the crate.
///
/// Parse and validation problems are user errors; [`Error::Invariant`] marks an
/// internal inconsistency that should never surface for valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("arrows do not compose: {0}")]
    NotComposable(String),
    #[error("inadmissible relation: {0}")]
    Inadmissible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid top element: {0}")]
    InvalidTopElement(String),
    #[error("point is not on the variety")]
    PointNotOnVariety,
    #[error("masts run through different vertex sequences")]
    VertexSequenceMismatch,
    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
