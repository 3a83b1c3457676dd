use thiserror::Error;

use crate::rational::{fmt_rational, Rational};

fn fmt_exponent(e: &Option<Rational>) -> String {
    match e {
        Some(q) => fmt_rational(q),
        None => "none".to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LcError {
    /// The sign at `exponent` (or the remainder starting there) is undecidable
    /// at the current precision. Recompute with a higher truncation order or
    /// more bits.
    #[error("indeterminate at exponent {}: recompute with higher precision", fmt_exponent(.exponent))]
    Indeterminate { exponent: Option<Rational> },
    #[error("leading coefficient is zero or of unknown sign (exponent {})", fmt_exponent(.exponent))]
    ZeroOrUnknownLeading { exponent: Option<Rational> },
    #[error("value is not provably positive")]
    NotPositive,
    #[error("value is not provably finite")]
    NotFinite,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Syntax error in a number literal or expression, with a byte offset.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self { position, message: message.into() }
    }
}
