use thiserror::Error;

/// Errors raised by the polynomial, group and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,

    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(i64),

    #[error("t is not invertible modulo {0} (zero constant term)")]
    TNotInvertible(String),

    #[error("polynomial {0} must be monic")]
    NotMonic(String),

    #[error("period {k} is not a multiple of the order of t; minimal valid period is {minimal}")]
    InvalidPeriod { k: u64, minimal: u64 },

    #[error("operation undefined on the identity element")]
    IdentityElement,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{what} exceeds cap {cap}")]
    CapExceeded {
        what: String,
        cap: u64,
        /// Best lower bound established before the cap was hit, if any.
        partial: Option<u64>,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn cap(what: impl Into<String>, cap: u64) -> Self {
        Error::CapExceeded {
            what: what.into(),
            cap,
            partial: None,
        }
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
