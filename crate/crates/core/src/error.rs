use alloc::string::String;
use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live over different variable alphabets.
    AlphabetMismatch { expected: String, found: String },
    /// A variable name is not part of the alphabet in use.
    UnknownVariable(String),
    /// A non-invertible variable received a negative exponent.
    NegativeExponent(String),
    /// Substitution into an invertible variable with a non-unit value.
    NonUnitSubstitution(String),
    /// Division by the zero polynomial.
    DivisionByZero,
    /// The divisor does not divide the dividend exactly.
    InexactDivision,
    /// An input expected to be symmetric under a ↔ b is not.
    NotSymmetric(String),
    /// An index or argument is outside its documented range.
    OutOfRange(String),
    /// Malformed textual input.
    Parse(String),
    /// The term order does not expose the requested elimination block.
    OrderMismatch(String),
    /// The configured reduction-step budget was exhausted.
    BudgetExceeded { steps: u64 },
    /// The quotient ring has infinitely many standard monomials.
    InfiniteRank,
    /// A candidate ℤ-basis failed verification.
    CandidateBasis(String),
    /// A resource bound other than the step budget was exceeded.
    ResourceLimit(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AlphabetMismatch { expected, found } => {
                write!(f, "alphabet mismatch: expected {expected}, found {found}")
            }
            Error::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            Error::NegativeExponent(name) => {
                write!(f, "negative exponent on non-invertible variable `{name}`")
            }
            Error::NonUnitSubstitution(name) => {
                write!(f, "substitution into invertible variable `{name}` must be a unit monomial")
            }
            Error::DivisionByZero => write!(f, "division by zero polynomial"),
            Error::InexactDivision => write!(f, "inexact polynomial division"),
            Error::NotSymmetric(what) => write!(f, "not symmetric under a <-> b: {what}"),
            Error::OutOfRange(what) => write!(f, "argument out of range: {what}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::OrderMismatch(msg) => write!(f, "term order mismatch: {msg}"),
            Error::BudgetExceeded { steps } => {
                write!(f, "reduction step budget exceeded after {steps} steps")
            }
            Error::InfiniteRank => write!(f, "quotient ring has infinite rank over Q"),
            Error::CandidateBasis(msg) => write!(f, "candidate basis rejected: {msg}"),
            Error::ResourceLimit(msg) => write!(f, "resource limit exceeded: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
