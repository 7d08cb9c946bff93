use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("{what} of size {size} exceeds the guard {limit}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("expected {expected} basis, found {found}")]
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("half-products are only defined on nonempty operands")]
    EmptyOperand,

    #[error("operator does not raise valuation: {0}")]
    ValuationViolation(String),

    #[error("variant {variant} requires m = 1, got m = {m}")]
    VariantArityMismatch { variant: &'static str, m: usize },

    #[error("result is not an integer: {0}")]
    NonIntegerResult(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
