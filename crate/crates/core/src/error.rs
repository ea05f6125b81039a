use thiserror::Error;

/// Errors reported by constructions, verification and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("window width {0} is not supported (maximum is 32)")]
    UnsupportedWindowWidth(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("radius {radius} exceeds word length {n}")]
    InvalidRadius { n: usize, radius: usize },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("pairing error: {0}")]
    Pairing(String),

    #[error("incompatible lengths {0} and {1}: gcd must be 1")]
    IncompatibleLengths(usize, usize),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),

    #[error("invalid seed: {0}")]
    InvalidSeed(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
