use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad input: out-of-range residue, non-prime modulus, malformed expression.
    #[error("{0}")]
    Usage(String),

    #[error("not invertible as formal power series")]
    NotInvertible,

    #[error("orientation violates convention: {0}")]
    Orientation(String),

    #[error("per-residue extraction requires b invertible mod p")]
    ResidueNeedsUnit,

    #[error("insufficient depth: series valid through {valid_through}, need at least {required}")]
    InsufficientDepth { valid_through: i64, required: i64 },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A claimed structural fact (for instance divisibility of an exponent by 3)
    /// did not hold. Indicates an inconsistent case or orientation.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
