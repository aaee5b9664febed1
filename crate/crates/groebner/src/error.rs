//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("exponent overflow in monomial product")]
    ExponentOverflow,

    #[error("coefficient field mismatch: {0}")]
    FieldMismatch(String),

    #[error("division by zero in the coefficient field")]
    DivisionByZero,

    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),

    #[error("modulus {0} does not fit below 2^63")]
    ModulusTooLarge(u64),

    #[error("the zero polynomial has no head term")]
    ZeroPolynomial,

    #[error("signature collision: the pair should have been filtered before the S-polynomial was formed")]
    SignatureCollision,

    #[error("{0}")]
    Domain(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Classifies the error for process exit codes: `false` for malformed
    /// input (exit 1), `true` for a broken internal invariant (exit 2).
    pub fn is_internal(&self) -> bool {
        match self {
            Error::Parse { .. }
            | Error::NonPrimeModulus(_)
            | Error::ModulusTooLarge(_)
            | Error::Domain(_)
            | Error::ZeroPolynomial => false,
            Error::VariableCountMismatch { .. }
            | Error::ExponentOverflow
            | Error::FieldMismatch(_)
            | Error::DivisionByZero
            | Error::SignatureCollision => true,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
