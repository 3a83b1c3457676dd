use std::cmp::Ordering;

use super::space::{ExtendedPoint, HaloRef, HullError, MetricSpace, NearstandardVerdict};
use crate::interval::CoefficientInterval;
use crate::lcf::{LeviCivita, MagnitudeClass, Precision, Truth};
use crate::rational::Rational;

fn check_space(s: &dyn MetricSpace, a: &ExtendedPoint) -> Result<(), HullError> {
    if a.space() != s.id() {
        return Err(HullError::SpaceMismatch { expected: s.id(), found: a.space() });
    }
    Ok(())
}

/// Standard parts and magnitude classes only look at exponents `<= 0`, so
/// any positive truncation order is enough for them.
fn standard_precision(precision: &Precision) -> Precision {
    Precision { order: Rational::from_integer(1.into()), bits: precision.bits }
}

/// `*d(a, b)`.
pub fn extended_distance(
    s: &dyn MetricSpace,
    a: &ExtendedPoint,
    b: &ExtendedPoint,
    precision: &Precision,
) -> Result<LeviCivita, HullError> {
    check_space(s, a)?;
    check_space(s, b)?;
    s.distance(a, b, precision)
}

/// Whether `a` is at finite distance from the basepoint.
pub fn in_galaxy(s: &dyn MetricSpace, a: &ExtendedPoint, precision: &Precision) -> Truth {
    match extended_distance(s, a, &s.basepoint(), &standard_precision(precision)).map(|d| d.classify_magnitude()) {
        Ok(MagnitudeClass::Infinitesimal | MagnitudeClass::Appreciable) => Truth::True,
        Ok(MagnitudeClass::Infinite) => Truth::False,
        _ => Truth::Unknown,
    }
}

/// Hull distance `st(*d(x, y))` between the halos of two finite points.
pub fn hull_distance(
    s: &dyn MetricSpace,
    x: &HaloRef,
    y: &HaloRef,
    precision: &Precision,
) -> Result<CoefficientInterval, HullError> {
    let precision = &standard_precision(precision);
    for h in [x, y] {
        match in_galaxy(s, &h.representative, precision) {
            Truth::True => {}
            Truth::False => return Err(HullError::NotFinite),
            Truth::Unknown => {
                // Surface the underlying failure when there is one.
                extended_distance(s, &h.representative, &s.basepoint(), precision)?;
                return Err(HullError::NotFinite);
            }
        }
    }
    let d = extended_distance(s, &x.representative, &y.representative, precision)?;
    Ok(d.standard_part()?)
}

pub fn is_approachable(s: &dyn MetricSpace, a: &ExtendedPoint, precision: &Precision) -> Truth {
    if check_space(s, a).is_err() {
        return Truth::Unknown;
    }
    s.approachable(a, precision)
}

pub fn is_nearstandard(s: &dyn MetricSpace, a: &ExtendedPoint, precision: &Precision) -> NearstandardVerdict {
    if check_space(s, a).is_err() {
        return NearstandardVerdict::Unknown;
    }
    s.nearstandard(a, precision)
}

/// Membership in `*B_n = {x : *d(x, p) <= n}`.
pub fn in_closed_ball(s: &dyn MetricSpace, a: &ExtendedPoint, n: &Rational, precision: &Precision) -> Truth {
    let radius = LeviCivita::from_rational(n.clone());
    match extended_distance(s, a, &s.basepoint(), precision).and_then(|d| Ok(d.compare(&radius)?)) {
        Ok(Ordering::Greater) => Truth::False,
        Ok(_) => Truth::True,
        Err(_) => Truth::Unknown,
    }
}
