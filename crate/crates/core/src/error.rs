use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("relation {index}: {message}")]
    Relation { index: usize, message: String },
    #[error("no nilpotency index up to {cap}; the presentation is not finite-dimensional or the cap is too small")]
    NilpotencyCap { cap: usize },
    #[error("path enumeration exceeded {0} paths")]
    PathCap(usize),
    #[error("field: {0}")]
    Field(String),
    #[error("field characteristic {p} is too small for an algebra of dimension {dim}")]
    FieldTooSmall { p: u64, dim: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
