use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring parameter mismatch: {left} vs {right}")]
    RMismatch { left: u32, right: u32 },

    #[error("invalid triple ({a},{b},{c}) for r = {r}")]
    InvalidTriple { a: u32, b: u32, c: u32, r: u32 },

    #[error("invalid partition data: {0}")]
    InvalidPartition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),

    #[error("resource cap exceeded: {what} needs {needed} entries, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        needed: usize,
        cap: usize,
    },

    #[error("singular system: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;
