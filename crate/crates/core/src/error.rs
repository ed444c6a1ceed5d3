use alloc::string::String;
use core::fmt;

/// Errors reported by the library.
///
/// Every operation that can fail does so loudly; there are no silent
/// fallbacks on the exact-arithmetic paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero polynomial or zero scalar.
    ZeroDivisor,
    /// A polynomial did not have the degree an operation requires.
    DegreeMismatch(String),
    /// Input polynomial has a repeated root where a separable one is required.
    Inseparable,
    /// The Galois group is not contained in D4 (no rational resolvent-cubic root).
    NotSubD4,
    /// Degenerate parameters for a transformation; the message says which.
    Degenerate(String),
    /// Parameter excluded by the defining identities of a family.
    ExcludedParameter(String),
    /// Galois group of order <= 2 (or an unclassified reducible shape):
    /// outside the scope of the intersection tables.
    OutOfScope(String),
    /// No intersection-table row is consistent with the computed evidence.
    InconsistentDecomposition(String),
    /// Retry budget exhausted while searching for a squarefree resolvent.
    RetriesExhausted,
    /// Numeric oracle could not certify its rounding at the precision used.
    PrecisionInsufficient,
    /// Text that could not be parsed as a polynomial or scalar.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDivisor => write!(f, "zero divisor"),
            Error::DegreeMismatch(m) => write!(f, "degree mismatch: {m}"),
            Error::Inseparable => write!(f, "polynomial is not separable"),
            Error::NotSubD4 => write!(f, "Galois group not <= D4"),
            Error::Degenerate(m) => write!(f, "degenerate parameters: {m}"),
            Error::ExcludedParameter(m) => write!(f, "excluded parameter: {m}"),
            Error::OutOfScope(m) => write!(f, "out of scope: {m}"),
            Error::InconsistentDecomposition(m) => write!(f, "inconsistent DT: {m}"),
            Error::RetriesExhausted => write!(f, "squarefree retries exhausted"),
            Error::PrecisionInsufficient => write!(f, "precision insufficient, retry higher"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
