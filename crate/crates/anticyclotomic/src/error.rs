//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("discriminant must be negative and congruent to 0 or 1 mod 4, got {0}")]
    InvalidDiscriminant(String),
    #[error("discriminant too large: |{0}| exceeds the configured bound {1}")]
    DiscriminantTooLarge(String, String),
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("moduli are not pairwise coprime")]
    NonCoprimeModuli,
    #[error("galois index {0} is not coprime to the modulus {1}")]
    BadGaloisIndex(u64, u64),
    #[error("no prime form: {0} is inert")]
    NoPrimeForm(u64),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("invariant not separating; choose different invariant")]
    InvariantNotSeparating,
    #[error("ambiguous subgroup selection: {0}")]
    AmbiguousSubgroup(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("descent resolvent degenerate after all retries")]
    DegenerateResolvent,
}

pub type Result<T> = std::result::Result<T, Error>;
