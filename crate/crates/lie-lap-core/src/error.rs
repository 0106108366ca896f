use alloc::string::String;
use core::fmt;

/// Errors raised by the core library.
///
/// `Domain` covers mathematically invalid inputs (an indefinite tensor where a
/// metric is required, a non-invertible Gram matrix), `Invalid` covers
/// malformed or inconsistent arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Arguments are malformed or have inconsistent sizes.
    Invalid(String),
    /// Input lies outside the mathematical domain of the operation.
    Domain(String),
    /// An internal consistency check failed (e.g. a characteristic polynomial
    /// with a nonvanishing imaginary part).
    Inconsistent(String),
    /// A bounded search ran out of candidates.
    Exhausted(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }

    pub(crate) fn exhausted(msg: impl Into<String>) -> Self {
        Error::Exhausted(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Invalid(m) => write!(f, "invalid input: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Inconsistent(m) => write!(f, "internal inconsistency: {m}"),
            Error::Exhausted(m) => write!(f, "search exhausted: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
