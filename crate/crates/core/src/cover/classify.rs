use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::{three_leg_bound, CoverError, CoverPoint};
use crate::interval::CoefficientInterval;
use crate::lcf::{LeviCivita, MagnitudeClass};
use crate::rational::{int, ratio, Rational};

/// Where a point of `*M` sits relative to the standard cover and its completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverClassification {
    /// Appreciable radius and finite angle: infinitely close to `(st r, st zeta)`.
    Nearstandard {
        r: CoefficientInterval,
        zeta: CoefficientInterval,
    },
    /// Infinitesimal radius: within the infinitesimal `bound` of `(t, 0)`, so it
    /// lies in the origin's halo in the completion.
    OriginHalo {
        bound: LeviCivita,
    },
    /// Appreciable radius and infinite angle: finite but not approachable.
    FiniteInapproachable,
    /// Infinite radius: outside the principal galaxy.
    OutsideGalaxy,
    Unknown,
}

impl CoverClassification {
    pub fn name(&self) -> &'static str {
        match self {
            CoverClassification::Nearstandard { .. } => "nearstandard",
            CoverClassification::OriginHalo { .. } => "origin-halo",
            CoverClassification::FiniteInapproachable => "finite-inapproachable",
            CoverClassification::OutsideGalaxy => "outside-galaxy",
            CoverClassification::Unknown => "unknown",
        }
    }
}

impl fmt::Display for CoverClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify_point(a: &CoverPoint) -> CoverClassification {
    match a.r().classify_magnitude() {
        MagnitudeClass::Infinite => CoverClassification::OutsideGalaxy,
        MagnitudeClass::Unknown => CoverClassification::Unknown,
        MagnitudeClass::Infinitesimal => origin_halo(a),
        MagnitudeClass::Appreciable => match a.zeta().classify_magnitude() {
            MagnitudeClass::Infinite => CoverClassification::FiniteInapproachable,
            MagnitudeClass::Unknown => CoverClassification::Unknown,
            MagnitudeClass::Appreciable | MagnitudeClass::Infinitesimal => {
                match (a.r().standard_part(), a.zeta().standard_part()) {
                    (Ok(r), Ok(zeta)) => CoverClassification::Nearstandard { r, zeta },
                    _ => CoverClassification::Unknown,
                }
            }
        },
    }
}

/// Detour through `r'' = r t^m` with `m = max(0, -lead(zeta))`, which keeps
/// the arc `r'' |zeta|` infinitesimal, then out to `(t, 0)`.
fn origin_halo(a: &CoverPoint) -> CoverClassification {
    let m = match a.zeta().order_bound() {
        Some(q) if q < Rational::zero() => -q,
        _ => Rational::zero(),
    };
    let r_mid = a.r() * &LeviCivita::t_pow(m);
    match three_leg_bound(a.r(), a.zeta(), &r_mid, &LeviCivita::t()) {
        Ok(bound) if bound.classify_magnitude() == MagnitudeClass::Infinitesimal => {
            CoverClassification::OriginHalo { bound }
        }
        _ => CoverClassification::Unknown,
    }
}

/// Witness that a finite point with infinite angle stays a standard distance
/// away from every standard point.
///
/// Any standard point with angle outside `[zeta - h, zeta + h]` is at least
/// `min(r - r_lo, r_hi - r, r_lo h)` away from the center in `*M`, because a
/// path leaving the rectangle `[r_lo, r_hi] x [zeta - h, zeta + h]` must
/// either cross a radial side or sweep the angle `h` at radius `>= r_lo`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationCertificate {
    pub center: CoverPoint,
    pub r_lo: LeviCivita,
    pub r_hi: LeviCivita,
    pub zeta_halfwidth: LeviCivita,
    /// A standard rational below the standard part of that minimum.
    pub ball_radius: Rational,
}

impl SeparationCertificate {
    /// Rechecks the rectangle and the radius claim from scratch.
    pub fn validate(&self) -> Result<(), CoverError> {
        let lt = |a: &LeviCivita, b: &LeviCivita| matches!(a.compare(b), Ok(Ordering::Less));
        let r = self.center.r();
        if !(lt(&LeviCivita::zero(), &self.r_lo) && lt(&self.r_lo, r) && lt(r, &self.r_hi)) {
            return Err(CoverError::PreconditionViolated("radius not inside the rectangle".into()));
        }
        if !lt(&LeviCivita::zero(), &self.zeta_halfwidth) {
            return Err(CoverError::PreconditionViolated("angular half-width must be positive".into()));
        }
        let margins = [r - &self.r_lo, &self.r_hi - r, &self.r_lo * &self.zeta_halfwidth];
        for m in &margins {
            let st = m.standard_part().map_err(CoverError::Indeterminate)?;
            if &self.ball_radius > st.lo() {
                return Err(CoverError::PreconditionViolated(format!("ball radius exceeds margin {m}")));
            }
        }
        if self.ball_radius <= Rational::zero() {
            return Err(CoverError::PreconditionViolated("ball radius must be positive".into()));
        }
        Ok(())
    }
}

/// Certificate for the rectangle `[r/2, 2r] x [zeta - 1, zeta + 1]`, with
/// ball radius the lower end of `st(r)/2`.
pub fn separation_certificate(center: &CoverPoint) -> Result<SeparationCertificate, CoverError> {
    if center.r().classify_magnitude() != MagnitudeClass::Appreciable {
        return Err(CoverError::NotApplicable(format!("radius {} is not appreciable", center.r())));
    }
    if center.zeta().classify_magnitude() != MagnitudeClass::Infinite {
        return Err(CoverError::NotApplicable(format!("angle {} is not infinite", center.zeta())));
    }
    let half = LeviCivita::from_rational(ratio(1, 2));
    let r_lo = center.r() * &half;
    let r_hi = center.r() * &LeviCivita::from_int(2);
    let st = center.r().standard_part().map_err(CoverError::Indeterminate)?;
    let cert = SeparationCertificate {
        center: center.clone(),
        r_lo,
        r_hi,
        zeta_halfwidth: LeviCivita::one(),
        ball_radius: st.lo() / int(2),
    };
    cert.validate()?;
    Ok(cert)
}

/// Standard lower bound on `*d(center, q)` for a standard point `q`.
pub fn inapproachability_lower_bound(center: &CoverPoint, q: &CoverPoint) -> Result<Rational, CoverError> {
    let cert = separation_certificate(center)?;
    if !q.zeta().classify_magnitude().is_finite() {
        return Err(CoverError::NotApplicable(format!("angle {} of the standard point is not finite", q.zeta())));
    }
    let below = (q.zeta() - center.zeta()).compare(&-&cert.zeta_halfwidth);
    let above = (q.zeta() - center.zeta()).compare(&cert.zeta_halfwidth);
    match (below, above) {
        (Ok(Ordering::Less), _) | (_, Ok(Ordering::Greater)) => Ok(cert.ball_radius),
        _ => Err(CoverError::NotApplicable(format!("{q} is not outside the certified rectangle"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::cover_distance;
    use crate::lcf::{parse_number, Precision};

    fn pt(r: &str, z: &str) -> CoverPoint {
        CoverPoint::new(parse_number(r).unwrap(), parse_number(z).unwrap()).unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_point(&pt("1", "t^-1")), CoverClassification::FiniteInapproachable);
        assert_eq!(classify_point(&pt("t^-1", "0")), CoverClassification::OutsideGalaxy);
        assert_eq!(
            classify_point(&pt("2 + t", "1 - t")),
            CoverClassification::Nearstandard {
                r: CoefficientInterval::from_int(2),
                zeta: CoefficientInterval::from_int(1)
            }
        );
        match classify_point(&pt("t", "t^-2")) {
            CoverClassification::OriginHalo { bound } => {
                assert_eq!(bound, parse_number("3t - 2t^3").unwrap());
            }
            other => panic!("unexpected {other}"),
        }
        assert_eq!(
            classify_point(&pt("t^2", "5")),
            CoverClassification::OriginHalo { bound: parse_number("t + 4t^2").unwrap() }
        );
        assert_eq!(classify_point(&pt("1", "[-1, 1]t^-1")), CoverClassification::Unknown);
    }

    #[test]
    fn certificate_for_unit_radius() {
        let c = separation_certificate(&pt("1", "t^-1")).unwrap();
        assert_eq!(c.ball_radius, ratio(1, 2));
        c.validate().unwrap();
        assert_eq!(inapproachability_lower_bound(&pt("1", "t^-1"), &CoverPoint::from_ints(3, 7)).unwrap(), ratio(1, 2));
    }

    #[test]
    fn certificate_is_sound_on_samples() {
        let p = Precision::default();
        let center = pt("1 - t", "-t^-1 + 2");
        let bound = inapproachability_lower_bound(&center, &CoverPoint::from_ints(1, 0)).unwrap();
        for (r, z) in [(1, 0), (2, 3), (5, -40), (1, 1000)] {
            let q = CoverPoint::from_ints(r, z);
            let d = cover_distance(&center, &q, &p).unwrap();
            let st = d.standard_part().unwrap();
            assert!(st.lo() >= &bound);
        }
    }

    #[test]
    fn certificate_preconditions() {
        assert!(matches!(separation_certificate(&pt("1", "3")), Err(CoverError::NotApplicable(_))));
        assert!(matches!(separation_certificate(&pt("t", "t^-1")), Err(CoverError::NotApplicable(_))));
        assert!(matches!(
            inapproachability_lower_bound(&pt("1", "t^-1"), &pt("1", "t^-1 + 1/2")),
            Err(CoverError::NotApplicable(_))
        ));
    }
}
