use thiserror::Error;

/// Errors raised by the algebraic core, the automata layer and the file formats.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("base dimension mismatch: {left} vs {right}")]
    BaseDim { left: usize, right: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("chip `{0}` has no assignment")]
    UnknownChip(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operation requires the boolean semiring, got {0}")]
    NonBoolean(&'static str),

    #[error("representation violates a defining relation: {0}")]
    Relation(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
