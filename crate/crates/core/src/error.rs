use std::fmt;

/// Errors surfaced by ring arithmetic and the factoring pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero element.
    DivisionByZero,
    /// Exact division requested but the divisor does not divide the dividend.
    NotDivisible,
    /// Zero passed to an operation that requires a nonzero element.
    ZeroInput,
    /// The input exceeds the factorization bound, or an intermediate product
    /// would overflow the fixed-width integer representation.
    InputTooLarge,
    /// `split_rational_prime` called on something other than a rational prime.
    NotPrime,
    /// Attempt to build a `Unit` from a non-invertible element.
    NotAUnit,
    /// A leading coefficient is zero where a nonzero one is required.
    ZeroLeadingCoefficient,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotDivisible => write!(f, "element is not exactly divisible by the divisor"),
            Error::ZeroInput => write!(f, "operation undefined for zero"),
            Error::InputTooLarge => write!(f, "input exceeds the factorization bound"),
            Error::NotPrime => write!(f, "argument is not a rational prime"),
            Error::NotAUnit => write!(f, "element is not a unit"),
            Error::ZeroLeadingCoefficient => write!(f, "leading coefficient must be nonzero"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
