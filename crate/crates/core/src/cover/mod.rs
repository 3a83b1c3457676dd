//! The metric universal cover `M` of the punctured plane: points `(r, zeta)`
//! with `r > 0` and an unwrapped angle `zeta`, metric `dr^2 + r^2 dzeta^2`.
//!
//! Its completion adds a single point, the origin (reached by `(eps, 0)` for
//! infinitesimal `eps`).

mod classify;
mod distance;
mod net;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::lcf::{format_number, LcError, LeviCivita};

pub use classify::{
    classify_point, inapproachability_lower_bound, separation_certificate, CoverClassification, SeparationCertificate,
};
pub use distance::{completion_distance, cover_distance, origin_path_upper_bound, three_leg_bound, CompletionPoint};
pub use net::{covering_map, separated_net};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("invalid cover point: {0}")]
    InvalidPoint(String),
    #[error("cannot decide whether the angle difference is below pi: {0}")]
    BranchIndeterminate(LcError),
    #[error("precision exhausted: {0}")]
    Indeterminate(LcError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("certificate not applicable: {0}")]
    NotApplicable(String),
    #[error("point is not standard and exact")]
    NotStandard,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A point `(r, zeta)` of `*M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverPoint {
    r: LeviCivita,
    zeta: LeviCivita,
}

impl CoverPoint {
    /// Requires `r > 0` to be decidable.
    pub fn new(r: LeviCivita, zeta: LeviCivita) -> Result<Self, CoverError> {
        match r.compare(&LeviCivita::zero()) {
            Ok(Ordering::Greater) => Ok(Self { r, zeta }),
            Ok(_) => Err(CoverError::InvalidPoint(format!("r = {r} is not positive"))),
            Err(e) => Err(CoverError::InvalidPoint(format!("sign of r = {r} undecidable: {e}"))),
        }
    }

    pub fn from_ints(r: i64, zeta: i64) -> Self {
        Self::new(LeviCivita::from_int(r), LeviCivita::from_int(zeta)).expect("positive radius")
    }

    pub fn r(&self) -> &LeviCivita {
        &self.r
    }

    pub fn zeta(&self) -> &LeviCivita {
        &self.zeta
    }

    pub fn is_standard_exact(&self) -> bool {
        let standard =
            |x: &LeviCivita| x.is_exact() && x.terms().iter().all(|t| num_traits::Zero::is_zero(&t.exponent));
        standard(&self.r) && standard(&self.zeta)
    }

    pub fn display_decimal(&self, digits: u32) -> String {
        format!("({}, {})", format_number(&self.r, Some(digits)), format_number(&self.zeta, Some(digits)))
    }
}

impl fmt::Display for CoverPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.zeta)
    }
}
