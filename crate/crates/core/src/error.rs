use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: String, right: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("non-proper symbol {0} where only proper symbols are allowed")]
    NonProperSymbol(String),
    #[error("word {0} is not a balanced virtual expression")]
    NotBalanced(String),
    #[error("image is not a scalar multiple of the highest weight vector")]
    NotEigenvector,
    #[error("polynomial is not shifted symmetric")]
    NotShiftedSymmetric,
    #[error("exact division failed: remainder is nonzero")]
    DivisionFailed,
    #[error("inconsistent linear system: {0}")]
    InconsistentSystem(String),
    #[error("Olshanski projection left a monomial involving index {0}")]
    OlshanskiSurvivor(usize),
    #[error("element is not central in U(gl({0}))")]
    NotCentral(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
