use num_bigint::BigInt;
use num_traits::Zero;

use super::{CoverError, CoverPoint};
use crate::interval::CoefficientInterval;
use crate::lcf::LcError;
use crate::rational::{floor_int, Rational};
use crate::transcendental::pi_interval;

/// Precision ceiling for [`covering_map`] before it reports failure.
const MAX_BITS: u32 = 4096;

/// The points `(1, 4k)` for `k = 0..n`. Any two are at least `4 > pi` apart
/// in angle, so every pair is exactly `2` apart: an infinite bounded
/// `2`-separated family in the limit.
pub fn separated_net(n: usize) -> Vec<CoverPoint> {
    (0..n).map(|k| CoverPoint::from_ints(1, 4 * k as i64)).collect()
}

/// The covering map `(r, zeta) -> (r, zeta mod 2pi)` on standard exact points.
///
/// The returned angle is an enclosure in `[0, 2pi)`; it is exact when no
/// wrap is needed.
pub fn covering_map(a: &CoverPoint, bits: u32) -> Result<(Rational, CoefficientInterval), CoverError> {
    if !a.is_standard_exact() {
        return Err(CoverError::NotStandard);
    }
    let exact = |x: &crate::lcf::LeviCivita| {
        x.coefficient(&Rational::zero()).and_then(|c| c.as_exact().cloned()).unwrap_or_else(Rational::zero)
    };
    let r = exact(a.r());
    let zeta = exact(a.zeta());
    let mut bits = bits.max(16);
    while bits <= MAX_BITS {
        let two_pi = pi_interval(bits).scale(&Rational::from_integer(BigInt::from(2)));
        let k_a = floor_int(&(&zeta / two_pi.lo()));
        let k_b = floor_int(&(&zeta / two_pi.hi()));
        if k_a == k_b {
            if k_a.is_zero() {
                return Ok((r, CoefficientInterval::exact(zeta)));
            }
            let wraps = two_pi.scale(&Rational::from_integer(k_a));
            let theta = &CoefficientInterval::exact(zeta) - &wraps;
            return Ok((r, theta));
        }
        bits *= 2;
    }
    Err(CoverError::Indeterminate(LcError::Indeterminate { exponent: None }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::cover_distance;
    use crate::lcf::{LeviCivita, Precision};
    use crate::rational::{int, parse_decimal};

    #[test]
    fn net_is_two_separated() {
        let net = separated_net(6);
        let p = Precision::default();
        for (i, a) in net.iter().enumerate() {
            for b in &net[i + 1..] {
                assert_eq!(cover_distance(a, b, &p).unwrap(), LeviCivita::from_int(2));
            }
            assert!(cover_distance(a, &CoverPoint::from_ints(1, 0), &p).is_ok());
        }
    }

    #[test]
    fn projection_wraps_angles() {
        let (r, theta) = covering_map(&CoverPoint::from_ints(3, 7), 64).unwrap();
        assert_eq!(r, int(3));
        // 7 - 2pi
        assert!(theta.contains(&parse_decimal("0.7168146928204135230747132334").unwrap()));
        assert!(theta.width() < parse_decimal("0.000000000000001").unwrap());
        let (_, neg) = covering_map(&CoverPoint::from_ints(1, -1), 64).unwrap();
        assert!(neg.contains(&parse_decimal("5.2831853071795864769252867665").unwrap()));
        let (_, same) = covering_map(&CoverPoint::from_ints(1, 1), 64).unwrap();
        assert_eq!(same, CoefficientInterval::from_int(1));
    }

    #[test]
    fn projection_rejects_nonstandard() {
        let p = CoverPoint::new(LeviCivita::one(), LeviCivita::t_pow(int(-1))).unwrap();
        assert_eq!(covering_map(&p, 64), Err(CoverError::NotStandard));
    }
}
