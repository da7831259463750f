use thiserror::Error;

/// Errors produced by the library. The CLI maps each variant to an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate geodesic: {0}")]
    Degenerate(String),
    #[error("geodesic runs into a cusp: {0}")]
    Cusp(String),
    #[error("expansion has {available} digits, {requested} requested")]
    Exhausted { available: usize, requested: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precision exhausted at {bits} bits")]
    PrecisionExhausted { bits: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
