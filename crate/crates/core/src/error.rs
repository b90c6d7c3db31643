use thiserror::Error;

/// Which argument of a two-polynomial operation an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    First,
    Second,
}

impl std::fmt::Display for Which {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Which::First => f.write_str("first"),
            Which::Second => f.write_str("second"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("interval is empty: lower endpoint must be below the upper endpoint")]
    InvalidInterval,
    #[error("{0} polynomial is not real-rooted")]
    NotRealRooted(Which),
    #[error("{0} polynomial has a negative leading coefficient")]
    NegativeLeadingCoefficient(Which),
    #[error("roots of the two polynomials do not alternate")]
    NotAlternating,
    #[error("coefficient {index} evaluated to the non-integer {value}")]
    NonIntegerCoefficient { index: usize, value: String },
    #[error("rank must be at least {min}, got {got}")]
    InvalidRank { min: u32, got: u32 },
    #[error("polynomial degree {degree} exceeds n = {n}")]
    DegreeExceedsN { degree: usize, n: usize },
    #[error("sequence entry {index} is negative")]
    NegativeInput { index: usize },
    #[error("sequence has length {len}, need at least {need}")]
    LengthTooShort { len: usize, need: usize },
    #[error("invalid range: need 1 <= l <= k, got l = {l}, k = {k}")]
    InvalidRange { l: u32, k: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("division by (1+t)^{power} left a nonzero remainder")]
    NonzeroRemainder { power: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
