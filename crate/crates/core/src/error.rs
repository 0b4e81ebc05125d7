use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("branch ({i},{j}) with mark {mark} is not crystallographic for node labels {li}, {lj}")]
    NonCrystallographic {
        i: usize,
        j: usize,
        mark: String,
        li: i64,
        lj: i64,
    },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("space is singular (radical dimension {0}); take the quotient form first")]
    SingularSpace(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("field mismatch: expected p = {expected}, got p = {got}")]
    FieldMismatch { expected: u64, got: u64 },

    #[error("capacity exceeded: {what} needs {needed} elements, cap is {cap}")]
    Capacity { what: String, needed: u128, cap: u128 },

    #[error("not a string C-group: {0}")]
    NotCGroup(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
