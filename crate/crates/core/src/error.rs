use thiserror::Error;

/// Errors raised by the decision engine, the Wright checker and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A class, rank or element parameter is outside its legal range.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// An argument is well formed but does not belong to the expected domain
    /// (a non-root passed as a root, mismatched contexts, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// The request exceeds a configured enumeration or realization limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal cross-check failed. This always indicates a bug.
    #[error("construction defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
