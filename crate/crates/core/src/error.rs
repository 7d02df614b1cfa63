use thiserror::Error;

/// Errors raised by the numerical and exact routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gamma function pole at non-positive integer {0}")]
    Pole(String),

    #[error("degenerate order: Pochhammer denominator ({base})_{index} vanishes")]
    DegenerateOrder { base: String, index: u64 },

    #[error("order nu = {0} is excluded (nu must avoid -1/2, -1, -3/2, -2, ...)")]
    InvalidOrder(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("terms stopped decreasing at n = {index} inside the alternating regime")]
    NonDecreasingTerms { index: u64 },

    #[error("combination weights sum to zero")]
    ZeroNormalization,

    #[error("invalid combination: {0}")]
    InvalidCombination(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
