use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// `Contradiction` is special: it is raised when a statement that should be a
/// theorem fails on a concrete input, so callers running exhaustive checks can
/// tell a broken input apart from a broken claim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("generators must be positive, got {0}")]
    ZeroGenerator(u64),
    #[error("gcd of generators is {0}, not 1")]
    GcdNotOne(u64),
    #[error("not a semigroup: {a} + {b} = {} is listed as a gap", a + b)]
    NotASemigroup { a: u64, b: u64 },
    #[error("{0} is not a positive element of the semigroup")]
    NotAnElement(u64),
    #[error("genus {genus} exceeds the enumeration cap {cap}")]
    CapExceeded { genus: u64, cap: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("element m_{index} = {value} is not divisible by {n}")]
    NonDivisibleElement { index: u64, value: u64, n: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operation undefined for genus 0")]
    GenusZero,
    #[error("rho4 numerator {0} is odd")]
    NonIntegerRho4(i64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("degenerate denominator A - gamma - 1 = 0")]
    DegenerateDenominator,
    #[error("genus {0} too small (need at least 2)")]
    GenusTooSmall(u64),
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("range violation: {0}")]
    RangeViolation(String),
    #[error("claim failed: {0}")]
    ClaimFailed(String),
    #[error("contradiction: {0}")]
    Contradiction(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable variant name used in structured CLI output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::ZeroGenerator(_) => "ZeroGenerator",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::NotASemigroup { .. } => "NotASemigroup",
            Error::NotAnElement(_) => "NotAnElement",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NonDivisibleElement { .. } => "NonDivisibleElement",
            Error::NotPrime(_) => "NotPrime",
            Error::GenusZero => "GenusZero",
            Error::NonIntegerRho4(_) => "NonIntegerRho4",
            Error::NotCoprime(..) => "NotCoprime",
            Error::DegenerateDenominator => "DegenerateDenominator",
            Error::GenusTooSmall(_) => "GenusTooSmall",
            Error::WrongShape(_) => "WrongShape",
            Error::ParityViolation(_) => "ParityViolation",
            Error::RangeViolation(_) => "RangeViolation",
            Error::ClaimFailed(_) => "ClaimFailed",
            Error::Contradiction(_) => "Contradiction",
            Error::Parse(_) => "Parse",
        }
    }
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}
