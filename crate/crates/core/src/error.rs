use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid lens parameters ({p}, {q}): {reason}")]
    InvalidLens { p: i64, q: i64, reason: &'static str },

    #[error("value {value} out of range [{min}, {max}]")]
    OutOfRange { value: i64, min: i64, max: i64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("expected a one-component diagram, found {0} components")]
    NotAKnot(usize),

    #[error("crossing count {crossings} exceeds the configured cap {cap}")]
    CrossingCap { crossings: usize, cap: usize },

    #[error("invalid search budget: {0}")]
    Budget(&'static str),

    #[error("wedge site does not belong to this diagram")]
    SiteMismatch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),
}

pub type Result<T> = std::result::Result<T, Error>;
