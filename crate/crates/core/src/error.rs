use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("resonance at order k = {k} (gap {gap:.3e})")]
    Resonance { k: usize, gap: f64 },
    #[error("series truncated at order {order} with tail estimate {tail:.3e}")]
    Truncation { order: usize, tail: f64 },
    #[error("no nonconstant solution: {0}")]
    NoNonconstant(String),
    #[error("quasi-K recursion inconsistent at weight {weight} (residual {residual:.3e})")]
    Inconsistency { weight: String, residual: f64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("comparison failure: {0}")]
    Comparison(String),
    #[error("solver error: {0}")]
    Solver(String),
}

impl Error {
    /// Stable process exit code for the CLI.
    pub fn code(&self) -> i32 {
        match self {
            Error::InvalidDimension(_) => 10,
            Error::Parameter(_) => 11,
            Error::Shape(_) => 12,
            Error::Domain(_) => 13,
            Error::Structural(_) => 14,
            Error::Resonance { .. } => 15,
            Error::Truncation { .. } => 16,
            Error::NoNonconstant(_) => 17,
            Error::Inconsistency { .. } => 18,
            Error::Unsupported(_) => 19,
            Error::Comparison(_) => 20,
            Error::Solver(_) => 21,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
