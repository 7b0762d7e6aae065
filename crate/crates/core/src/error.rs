//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix has non-finite entries")]
    NonFiniteEntries,

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm})")]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },

    #[error("eigenvalue {eigenvalue} escapes the function domain [{domain_lo}, {domain_hi}]")]
    DomainViolation {
        eigenvalue: f64,
        domain_lo: f64,
        domain_hi: f64,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("parameter {name} = {value} out of range")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("bad interval: lo = {lo} must be strictly below hi = {hi}")]
    BadInterval { lo: f64, hi: f64 },

    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<V> = std::result::Result<V, Error>;
