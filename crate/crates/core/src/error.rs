use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has a repeated root (zero discriminant)")]
    ZeroDiscriminant,
    #[error("polynomial has three real roots (positive discriminant)")]
    PositiveDiscriminant,
    #[error("the value is the rational integer {0}")]
    RationalInput(BigInt),
    #[error("b^2 - 4c is a perfect square, so the root is rational")]
    RationalRoot,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("working precision exhausted at {0} bits")]
    PrecisionExhausted(u32),
    #[error("at least two elements are required")]
    TooFewElements,
    #[error("not a quadratic algebraic integer")]
    NotQuadratic,
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("target field signature does not match the family")]
    WrongSignature,
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
