use alloc::string::String;

/// Errors raised by constructions and computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("value {0} is not an element of the ring")]
    NotInRing(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("ring mismatch")]
    RingMismatch,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("budget exceeded: {needed} potential entries, ceiling {ceiling}")]
    BudgetExceeded { needed: u128, ceiling: u128 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("boundary of boundary is nonzero in degree {0}")]
    NotAComplex(i64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = core::result::Result<T, Error>;
