//! A computable non-Archimedean ordered field: truncated Levi-Civita series
//! in one positive infinitesimal `t`, standing in for the finite-support
//! fragment of the hyperreals.
//!
//! `t` and `t^-1` are the canonical infinitesimal and infinite witnesses.

mod error;
pub mod expr;
pub mod literal;
mod number;
mod order;
mod series;

pub use error::{LcError, ParseError};
pub use expr::{evaluate, EvalError};
pub use literal::{format_number, parse_number};
pub use number::{LeviCivita, Term, Truncation};
pub use order::{MagnitudeClass, Truth};
pub use series::pi_constant;

use crate::rational::{int, Rational};

/// Truncation order and coefficient precision (bits) used by operations that
/// cannot be computed exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precision {
    pub order: Rational,
    pub bits: u32,
}

impl Precision {
    pub fn new(order: Rational, bits: u32) -> Self {
        Self { order, bits }
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self { order: int(8), bits: 64 }
    }
}
