//! Order structure: comparison, magnitude classes, standard part, halos and
//! hyperrational approximation.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::error::LcError;
use super::number::{LeviCivita, Term, Truncation};
use crate::interval::CoefficientInterval;
use crate::rational::Rational;

/// Three-valued answer for predicates that may be undecidable at the
/// current precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Truth::True
    }

    pub fn is_false(self) -> bool {
        self == Truth::False
    }
}

impl std::ops::Not for Truth {
    type Output = Truth;
    fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::True => "true",
            Truth::False => "false",
            Truth::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MagnitudeClass {
    Infinitesimal,
    Appreciable,
    Infinite,
    Unknown,
}

impl MagnitudeClass {
    /// Infinitesimal or appreciable.
    pub fn is_finite(self) -> bool {
        matches!(self, MagnitudeClass::Infinitesimal | MagnitudeClass::Appreciable)
    }
}

impl fmt::Display for MagnitudeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MagnitudeClass::Infinitesimal => "infinitesimal",
            MagnitudeClass::Appreciable => "appreciable",
            MagnitudeClass::Infinite => "infinite",
            MagnitudeClass::Unknown => "unknown",
        })
    }
}

impl LeviCivita {
    /// Sign of the value, decided by the leading coefficient.
    pub fn sign(&self) -> Result<Ordering, LcError> {
        match self.leading() {
            None => match self.truncation() {
                Truncation::Infinite => Ok(Ordering::Equal),
                Truncation::Finite(t) => Err(LcError::Indeterminate { exponent: Some(t.clone()) }),
            },
            Some(lead) => {
                lead.coeff.sign().ok_or_else(|| LcError::Indeterminate { exponent: Some(lead.exponent.clone()) })
            }
        }
    }

    /// Compares `self` with `other` through the sign of `self - other`.
    ///
    /// `Equal` is reported only when the difference is exactly zero with both
    /// operands exact; a difference of `0 + O(t^T)` is indeterminate.
    pub fn compare(&self, other: &LeviCivita) -> Result<Ordering, LcError> {
        let diff = self - other;
        match diff.sign()? {
            Ordering::Equal if !(self.is_exact() && other.is_exact()) => {
                Err(LcError::Indeterminate { exponent: diff.truncation().finite().cloned() })
            }
            ord => Ok(ord),
        }
    }

    pub fn abs(&self) -> Result<LeviCivita, LcError> {
        match self.sign()? {
            Ordering::Less => Ok(-self),
            _ => Ok(self.clone()),
        }
    }

    pub fn classify_magnitude(&self) -> MagnitudeClass {
        let zero = Rational::zero();
        match self.leading() {
            None => {
                if self.truncation().exceeds(&zero) {
                    MagnitudeClass::Infinitesimal
                } else {
                    MagnitudeClass::Unknown
                }
            }
            Some(lead) => {
                if lead.exponent.is_positive() {
                    // Every possible term, the leading one included, sits above 0.
                    MagnitudeClass::Infinitesimal
                } else if lead.coeff.straddles_zero() {
                    MagnitudeClass::Unknown
                } else if lead.exponent.is_zero() {
                    MagnitudeClass::Appreciable
                } else {
                    MagnitudeClass::Infinite
                }
            }
        }
    }

    /// The exponent-0 coefficient of a finite value (`st(x)`).
    pub fn standard_part(&self) -> Result<CoefficientInterval, LcError> {
        if !self.classify_magnitude().is_finite() {
            return Err(LcError::NotFinite);
        }
        Ok(self.coefficient(&Rational::zero()).unwrap_or_else(CoefficientInterval::zero))
    }

    /// Splits a finite value into its standard part and infinitesimal tail.
    pub(crate) fn split_standard(&self) -> Result<(CoefficientInterval, LeviCivita), LcError> {
        let st = self.standard_part()?;
        let zero = Rational::zero();
        let tail: Vec<Term> = self.terms().iter().filter(|t| t.exponent > zero).cloned().collect();
        Ok((st, LeviCivita::from_terms(tail, self.truncation().clone())))
    }

    /// Whether `self` and `other` lie in the same halo (`self - other` infinitesimal).
    pub fn halo_equal(&self, other: &LeviCivita) -> Truth {
        match (self - other).classify_magnitude() {
            MagnitudeClass::Infinitesimal => Truth::True,
            MagnitudeClass::Appreciable | MagnitudeClass::Infinite => Truth::False,
            MagnitudeClass::Unknown => Truth::Unknown,
        }
    }

    /// A value with exact rational coefficients within `eps` of `self`.
    ///
    /// With `e` the leading exponent of `eps`, the result keeps the terms of
    /// `self` up to `t^e` (interval coefficients replaced by midpoints), so the
    /// error is either of order above `e` or bounded at `t^e` by the half-width
    /// of one coefficient, which must stay below the leading coefficient of
    /// `eps`.
    pub fn approximate_within(&self, eps: &LeviCivita) -> Result<LeviCivita, LcError> {
        match eps.sign()? {
            Ordering::Greater => {}
            _ => return Err(LcError::NotPositive),
        }
        let lead = eps.leading().expect("positive values have a leading term");
        let e = &lead.exponent;
        if !self.truncation().exceeds(e) {
            return Err(LcError::Indeterminate { exponent: self.truncation().finite().cloned() });
        }
        let mut terms = Vec::new();
        for term in self.terms_up_to(e) {
            let exact = term.coeff.is_exact();
            if &term.exponent < e && !exact {
                return Err(LcError::Indeterminate { exponent: Some(term.exponent) });
            }
            if &term.exponent == e && !exact {
                let half_width = term.coeff.width() / crate::rational::int(2);
                if half_width >= *lead.coeff.lo() {
                    return Err(LcError::Indeterminate { exponent: Some(term.exponent) });
                }
            }
            terms.push(Term::new(term.exponent, CoefficientInterval::exact(term.coeff.midpoint())));
        }
        Ok(LeviCivita::from_terms(terms, Truncation::Infinite))
    }
}
