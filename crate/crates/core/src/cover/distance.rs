use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::{CoverError, CoverPoint};
use crate::lcf::{pi_constant, LcError, LeviCivita, Precision};
use crate::rational::{int, Rational};

/// Attempts made by [`cover_distance`] before giving up on raising precision.
const MAX_REFINEMENTS: usize = 6;

/// Geodesic distance on the cover.
///
/// Below an angle difference of `pi` the straight chord
/// `sqrt(r1^2 + r2^2 - 2 r1 r2 cos(dzeta))` lifts to the cover. From `pi` on,
/// the infimum runs through the puncture and equals `r1 + r2`; it is not
/// attained in `M` but is attained in the completion.
pub fn cover_distance(a: &CoverPoint, b: &CoverPoint, precision: &Precision) -> Result<LeviCivita, CoverError> {
    let dzeta = a.zeta() - b.zeta();
    let pi = pi_constant(precision.bits);
    let below_pi = |x: &LeviCivita| x.compare(&pi).map(|o| o == Ordering::Less);
    let chord =
        below_pi(&dzeta).and_then(|lt| Ok(lt && below_pi(&-&dzeta)?)).map_err(CoverError::BranchIndeterminate)?;
    if !chord {
        return Ok(a.r() + b.r());
    }
    chord_length(a.r(), b.r(), &dzeta, precision)
}

fn chord_length(
    r1: &LeviCivita,
    r2: &LeviCivita,
    dzeta: &LeviCivita,
    precision: &Precision,
) -> Result<LeviCivita, CoverError> {
    let lead = |x: &LeviCivita| x.order_bound().unwrap_or_else(Rational::zero);
    let target = precision.order.clone();
    let mut cos_order = &target - lead(r1) - lead(r2);
    let mut bits = precision.bits;
    let mut last_error = LcError::Indeterminate { exponent: None };
    for _ in 0..MAX_REFINEMENTS {
        let cos = dzeta.cos_enclosure(&cos_order, bits).map_err(CoverError::Indeterminate)?;
        let two_r1r2 = &(r1 * r2) * &LeviCivita::from_int(2);
        let radicand = &(&(r1 * r1) + &(r2 * r2)) - &(&two_r1r2 * &cos);
        if radicand.is_exact_zero() {
            return Ok(LeviCivita::zero());
        }
        // The radicand is a squared length, so `O(t^T)` has a root in `O(t^(T/2))`.
        let negligible = |e: &Rational| e >= &(&target * int(2));
        let Some(leading) = radicand.leading() else {
            if let Some(t) = radicand.truncation().finite().filter(|t| negligible(t)) {
                return Ok(LeviCivita::big_o(t / int(2)));
            }
            // Everything cancelled into the remainder: look deeper.
            cos_order = std::cmp::max(&cos_order + int(2), &target * int(2) - lead(r1) - lead(r2));
            last_error = LcError::Indeterminate { exponent: radicand.truncation().finite().cloned() };
            continue;
        };
        if leading.coeff.straddles_zero() {
            if negligible(&leading.exponent) {
                return Ok(LeviCivita::big_o(&leading.exponent / int(2)));
            }
            bits += 64;
            cos_order += int(1);
            last_error = LcError::Indeterminate { exponent: Some(leading.exponent.clone()) };
            continue;
        }
        let q = leading.exponent.clone();
        // sqrt(X, P) carries O(t^(P - q/2)); X itself must be known to P + q/2.
        let half_q = &q / int(2);
        let wanted = &target + &half_q;
        if let Some(t) = radicand.truncation().finite() {
            if t < &wanted {
                cos_order += &wanted - t;
                last_error = LcError::Indeterminate { exponent: Some(t.clone()) };
                continue;
            }
        }
        return radicand.sqrt(&wanted, bits).map_err(CoverError::Indeterminate);
    }
    Err(CoverError::Indeterminate(last_error))
}

/// Length of the three-leg path `(r, zeta) -> (r_mid, zeta) -> (r_mid, 0) -> (eps, 0)`:
/// `|r - r_mid| + r_mid |zeta| + |r_mid - eps|`.
pub fn three_leg_bound(
    r: &LeviCivita,
    zeta: &LeviCivita,
    r_mid: &LeviCivita,
    eps: &LeviCivita,
) -> Result<LeviCivita, CoverError> {
    let abs = |x: LeviCivita| x.abs().map_err(CoverError::Indeterminate);
    let radial_in = abs(r - r_mid)?;
    let arc = r_mid * &abs(zeta.clone())?;
    let radial_out = abs(r_mid - eps)?;
    Ok(&(&radial_in + &arc) + &radial_out)
}

/// The path bound `*d((1, zeta), (eps, 0)) <= (1 - 1/zeta^2) + zeta/zeta^2 + |1/zeta^2 - eps|`
/// for infinite `zeta` and positive infinitesimal `eps`.
pub fn origin_path_upper_bound(
    a: &CoverPoint,
    eps: &LeviCivita,
    precision: &Precision,
) -> Result<LeviCivita, CoverError> {
    if a.r() != &LeviCivita::one() {
        return Err(CoverError::PreconditionViolated(format!("expected r = 1, got {}", a.r())));
    }
    if a.zeta().classify_magnitude() != crate::lcf::MagnitudeClass::Infinite {
        return Err(CoverError::PreconditionViolated(format!("zeta = {} is not infinite", a.zeta())));
    }
    let positive = matches!(eps.compare(&LeviCivita::zero()), Ok(Ordering::Greater));
    if !positive || eps.classify_magnitude() != crate::lcf::MagnitudeClass::Infinitesimal {
        return Err(CoverError::PreconditionViolated(format!("eps = {eps} is not a positive infinitesimal")));
    }
    let zeta_sq = a.zeta() * a.zeta();
    let r_mid = zeta_sq.inverse(&precision.order).map_err(CoverError::Indeterminate)?;
    three_leg_bound(a.r(), a.zeta(), &r_mid, eps)
}

/// A point of the completion `M ∪ {origin}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CompletionPoint {
    Origin,
    Point(CoverPoint),
}

impl fmt::Display for CompletionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompletionPoint::Origin => f.write_str("origin"),
            CompletionPoint::Point(p) => p.fmt(f),
        }
    }
}

impl From<CoverPoint> for CompletionPoint {
    fn from(p: CoverPoint) -> Self {
        CompletionPoint::Point(p)
    }
}

/// Metric of the completion: `d(origin, (r, zeta)) = r`, otherwise the cover distance.
pub fn completion_distance(
    a: &CompletionPoint,
    b: &CompletionPoint,
    precision: &Precision,
) -> Result<LeviCivita, CoverError> {
    match (a, b) {
        (CompletionPoint::Origin, CompletionPoint::Origin) => Ok(LeviCivita::zero()),
        (CompletionPoint::Origin, CompletionPoint::Point(p)) | (CompletionPoint::Point(p), CompletionPoint::Origin) => {
            Ok(p.r().clone())
        }
        (CompletionPoint::Point(p), CompletionPoint::Point(q)) => cover_distance(p, q, precision),
    }
}
