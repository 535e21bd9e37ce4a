use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("ambient dimension {0} exceeds the supported maximum of {1} variables")]
    TooManyVariables(usize, usize),

    #[error("variable index {0} out of range 1..={1}")]
    VariableOutOfRange(usize, usize),

    #[error("operation requires a squarefree ideal")]
    NotSquarefree,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a proper ideal (the unit ideal was given)")]
    UnitIdeal,

    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),

    #[error("field characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),

    #[error("graph invariant violated: {0}")]
    GraphInvariant(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Syntax error in the ideal text grammar or a structured input,
/// with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}
