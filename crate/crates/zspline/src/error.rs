use std::fmt;

use num_bigint::BigInt;

/// Errors reported by constructors, spline operations, and oracles.
///
/// `Internal` is special: it signals that a consistency check inside an
/// algorithm failed, which means a bug in this crate rather than bad input.
/// Callers should surface it loudly instead of recovering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation that needs at least one value got an empty list.
    EmptyInput(&'static str),
    /// A value that must be at least 1 (label, modulus, bound) was not.
    NonPositive { what: &'static str, value: BigInt },
    /// A graph constructor rejected its arguments.
    InvalidGraph(String),
    /// A vertex-value list does not match the graph's vertex count.
    LengthMismatch { expected: usize, actual: usize },
    /// The operation needs a graph from a different family.
    FamilyMismatch { expected: &'static str, actual: &'static str },
    /// An index or size argument is outside the supported range.
    OutOfRange(String),
    /// A precondition on an input spline does not hold.
    InvalidSpline(String),
    /// A JSON document does not match the expected schema.
    Document(String),
    /// The enumeration work budget was exhausted before the search finished.
    BudgetExceeded { budget: u64 },
    /// An internal consistency check failed; this is a bug, not bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput(what) => write!(f, "{what} requires at least one value"),
            Error::NonPositive { what, value } => {
                write!(f, "{what} must be at least 1, got {value}")
            }
            Error::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
            Error::LengthMismatch { expected, actual } => {
                write!(f, "expected {expected} vertex values, got {actual}")
            }
            Error::FamilyMismatch { expected, actual } => {
                write!(f, "expected a {expected} graph, got a {actual} graph")
            }
            Error::OutOfRange(msg) => write!(f, "out of range: {msg}"),
            Error::InvalidSpline(msg) => write!(f, "invalid spline: {msg}"),
            Error::Document(msg) => write!(f, "malformed document: {msg}"),
            Error::BudgetExceeded { budget } => {
                write!(f, "enumeration budget of {budget} candidates exhausted")
            }
            Error::Internal(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
