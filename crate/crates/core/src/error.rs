use thiserror::Error;

use crate::ExactRational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty pattern")]
    EmptyPattern,

    #[error("invalid character {ch:?} at position {pos} (expected 'u' or 'r')")]
    InvalidStep { ch: char, pos: usize },

    #[error("exhaustive enumeration limited to {limit} total steps, got {requested}")]
    SizeLimit { limit: usize, requested: usize },

    #[error("pattern {pattern} is {found}, but {operation} requires {expected}")]
    WrongClass {
        operation: &'static str,
        pattern: String,
        found: String,
        expected: &'static str,
    },

    #[error("{operation}: {reason}")]
    InvalidArgument {
        operation: &'static str,
        reason: String,
    },

    #[error("cell ({n}, {m}) lies outside the table")]
    OutOfTable { n: i64, m: i64 },

    #[error("{formula}: division by zero at {at}")]
    ZeroDenominator { formula: &'static str, at: String },

    #[error("{formula}: result {value} at {at} is not an integer")]
    NonIntegral {
        formula: &'static str,
        at: String,
        value: ExactRational,
    },

    #[error("method {method} does not apply: {reason}")]
    MethodNotApplicable {
        method: &'static str,
        reason: String,
    },

    #[error("methods disagree at (n={n}, m={m}, l={l}): {details}")]
    Mismatch {
        n: usize,
        m: usize,
        l: usize,
        details: String,
    },

    #[error("malformed table data: {0}")]
    Parse(String),
}
