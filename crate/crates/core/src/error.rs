//! Error type shared across the kernel.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A variable does not belong to the ring it is used in.
    ContextMismatch(String),
    /// Leading term of the zero polynomial was requested.
    ZeroPolynomial,
    /// Division by zero in the coefficient field.
    DivisionByZero,
    /// Buchberger processed more S-pairs than the configured cap.
    BudgetExceeded { pairs: usize },
    /// Malformed input to a constructor (interval list, partition, spec, ...).
    Invalid(String),
    /// Text that does not match the polynomial grammar.
    Parse(String),
    /// A sampled or supplied block is singular where invertibility is required.
    SingularBlock,
    /// A matrix fails a precondition (shape or required vanishing).
    BadMatrix(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ContextMismatch(msg) => write!(f, "ring context mismatch: {msg}"),
            Error::ZeroPolynomial => write!(f, "zero polynomial has no leading term"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::BudgetExceeded { pairs } => {
                write!(f, "computation budget exceeded after {pairs} S-pairs")
            }
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::SingularBlock => write!(f, "singular block where an invertible one is required"),
            Error::BadMatrix(msg) => write!(f, "bad matrix: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
