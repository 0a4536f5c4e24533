use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be prime (got {0})")]
    NotPrime(u64),

    #[error("modulus {0} is too large: (p-1)^2 must fit in 64 bits")]
    ModulusTooLarge(u64),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),

    #[error("variable count mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("parse error at byte {position}: {reason}")]
    Parse { position: usize, reason: String },

    #[error("resource cap exceeded: {needed} factors requested, cap is {cap}")]
    ResourceCap { needed: u128, cap: u64 },

    #[error("odd prime p requires odd sphere dimensions, but n_{index} = {value} is even")]
    Parity { index: usize, value: u64 },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
