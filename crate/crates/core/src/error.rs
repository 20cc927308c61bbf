use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational was constructed with denominator zero.
    ZeroDenominator,
    /// Division by an exact zero.
    DivisionByZero,
    /// Text that is neither `A/B` nor an integer `A`.
    InvalidRational(String),
    /// Success probability outside `[0, 1]`.
    ProbabilityOutOfRange,
    /// Index `k` outside the range the operation accepts for `n`.
    IndexOutOfRange { n: u32, k: i64 },
    /// Enclosure widths must be strictly positive.
    NonPositiveWidth,
    /// A finite distribution violated one of its invariants.
    InvalidDistribution(&'static str),
    /// Bisection ran past its step budget without reaching its target.
    RefinementLimit { n: u32, steps: u32 },
    /// Evidence contradicting the expected certificate was found.
    Falsified { n: u32, k: u32, reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::InvalidRational(s) => write!(f, "malformed rational {s:?} (expected A/B or A)"),
            Error::ProbabilityOutOfRange => f.write_str("p out of range"),
            Error::IndexOutOfRange { n, k } => write!(f, "k = {k} out of range for n = {n}"),
            Error::NonPositiveWidth => f.write_str("width must be positive"),
            Error::InvalidDistribution(why) => write!(f, "invalid distribution: {why}"),
            Error::RefinementLimit { n, steps } => {
                write!(f, "enclosures for n = {n} not separated after {steps} bisection steps")
            }
            Error::Falsified { n, k, reason } => {
                write!(f, "certificate falsified for n = {n}, k = {k}: {reason}")
            }
        }
    }
}

impl core::error::Error for Error {}
