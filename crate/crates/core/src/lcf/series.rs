//! Field inverse, square root and the trigonometric functions, all through
//! the factorization `a = c t^q (1 + u)` with `u` infinitesimal.

use num_traits::{One, Signed, Zero};

use super::error::LcError;
use super::number::{LeviCivita, Term};
use crate::interval::CoefficientInterval;
use crate::rational::{int, Rational};
use crate::transcendental::{sin_cos_interval, sqrt_interval};

/// `a = c t^q (1 + u)`: returns `(c, q, u)`.
fn factor_leading(a: &LeviCivita) -> Option<(CoefficientInterval, Rational, LeviCivita)> {
    let lead = a.leading()?;
    let recip = lead.coeff.recip()?;
    let q = lead.exponent.clone();
    let rest: Vec<Term> = a.terms()[1..].iter().map(|t| Term::new(&t.exponent - &q, &t.coeff * &recip)).collect();
    let u = LeviCivita::from_terms(rest, a.truncation().shift(&-&q));
    Some((lead.coeff.clone(), q, u))
}

/// Significant bits kept for inexact coefficients inside series, beyond the
/// requested precision.
const SERIES_GUARD_BITS: u32 = 32;

/// Working precision of [`LeviCivita::inverse`], which has no bits parameter.
const INVERSE_BITS: u32 = 192;

/// Successive powers `u, u^2, ...` below `order`, each truncated there and
/// with inexact coefficients rounded to `bits` significant bits.
fn powers<'a>(u: &'a LeviCivita, order: &'a Rational, bits: u32) -> impl Iterator<Item = (u64, LeviCivita)> + 'a {
    let valuation = u.order_bound().expect("u is not exactly zero");
    debug_assert!(valuation.is_positive());
    let mut power = LeviCivita::one();
    let mut k: u64 = 0;
    std::iter::from_fn(move || {
        k += 1;
        // The k-th power has order at least k * valuation.
        if &(&valuation * int(k as i64)) >= order {
            return None;
        }
        power = (&power * u).truncated(order).round_coefficients(bits);
        Some((k, power.clone()))
    })
}

/// `sum_{k} coeffs(k) u^k` with all terms of exponent below `order` and
/// `O(t^order)` for the rest. `u` must be infinitesimal and not exactly zero.
fn power_series<F>(u: &LeviCivita, order: &Rational, bits: u32, mut coeff: F) -> LeviCivita
where
    F: FnMut(u64) -> Rational,
{
    let mut sum = LeviCivita::from_rational(coeff(0));
    for (k, power) in powers(u, order, bits) {
        let c = coeff(k);
        if !c.is_zero() {
            sum = &sum + &power.scale(&CoefficientInterval::exact(c));
        }
    }
    sum.truncated(order)
}

impl LeviCivita {
    /// Multiplicative inverse `c^-1 t^-q sum_k (-u)^k` for `a = c t^q (1 + u)`.
    ///
    /// `order` is relative: `a * a.inverse(T) = 1 + O(t^T)`, so the result
    /// itself carries `O(t^(T - q))`.
    pub fn inverse(&self, order: &Rational) -> Result<LeviCivita, LcError> {
        let (c, q, u) =
            factor_leading(self).ok_or_else(|| LcError::ZeroOrUnknownLeading { exponent: self.order_bound() })?;
        let inv_c = c.recip().expect("leading coefficient excludes zero");
        if u.is_exact_zero() {
            return Ok(LeviCivita::monomial(inv_c, -q));
        }
        let neg_u = -&u;
        let series = power_series(&neg_u.round_coefficients(INVERSE_BITS), order, INVERSE_BITS, |_| Rational::one());
        Ok(series.scale(&inv_c).shift_exponents(&-q))
    }

    /// `self / other` with the inverse taken up to `O(t^order)`.
    pub fn div(&self, other: &LeviCivita, order: &Rational) -> Result<LeviCivita, LcError> {
        let Some(lead) = self.order_bound() else {
            return Ok(LeviCivita::zero());
        };
        // The product's remainder starts at order(self) + T(inverse), and
        // T(inverse) = relative order - order(other).
        let other_lead = other.order_bound().unwrap_or_else(Rational::zero);
        let inv = other.inverse(&(order - &lead + &other_lead))?;
        Ok(self * &inv)
    }

    /// Square root with `sqrt(c)` enclosed to `2^-bits`. As for the inverse,
    /// `order` is relative to the argument: the square of the result agrees
    /// with `self` up to `O(t^order)`, so the result carries `O(t^(order - q/2))`.
    pub fn sqrt(&self, order: &Rational, bits: u32) -> Result<LeviCivita, LcError> {
        let lead = self.leading().ok_or(LcError::NotPositive)?;
        if !lead.coeff.lo().is_positive() {
            return Err(LcError::NotPositive);
        }
        let (c, q, u) = factor_leading(self).ok_or(LcError::NotPositive)?;
        let root_c = sqrt_interval(&c, bits).ok_or(LcError::NotPositive)?;
        let half_q = &q / int(2);
        if u.is_exact_zero() {
            return Ok(LeviCivita::monomial(root_c, half_q));
        }
        let relative = order - &q;
        // Binomial coefficients C(1/2, k) = C(1/2, k-1) (1/2 - k + 1) / k.
        let half = Rational::new(1.into(), 2.into());
        let mut binom = Rational::one();
        let work = bits + SERIES_GUARD_BITS;
        let series = power_series(&u.round_coefficients(work), &relative, work, |k| {
            if k > 0 {
                binom = &binom * (&half - int(k as i64 - 1)) / int(k as i64);
            }
            binom.clone()
        });
        Ok(series.scale(&root_c).shift_exponents(&half_q))
    }

    /// `cos(a)` up to `O(t^order)` for finite `a = s + u`: the standard part
    /// enters through rigorous enclosures of `cos s` and `sin s`, the
    /// infinitesimal tail through the Taylor polynomials of `cos u`, `sin u`.
    pub fn cos_enclosure(&self, order: &Rational, bits: u32) -> Result<LeviCivita, LcError> {
        let (sin_s, cos_s, cos_u, sin_u) = self.trig_parts(order, bits)?;
        Ok(&cos_u.scale(&cos_s) - &sin_u.scale(&sin_s))
    }

    /// `sin(a) = sin(s) cos(u) + cos(s) sin(u)`, analogous to [`Self::cos_enclosure`].
    pub fn sin_enclosure(&self, order: &Rational, bits: u32) -> Result<LeviCivita, LcError> {
        let (sin_s, cos_s, cos_u, sin_u) = self.trig_parts(order, bits)?;
        Ok(&cos_u.scale(&sin_s) + &sin_u.scale(&cos_s))
    }

    fn trig_parts(
        &self,
        order: &Rational,
        bits: u32,
    ) -> Result<(CoefficientInterval, CoefficientInterval, LeviCivita, LeviCivita), LcError> {
        if !self.classify_magnitude().is_finite() {
            return Err(LcError::NotFinite);
        }
        let (s, u) = self.split_standard()?;
        let (sin_s, cos_s) = if s.is_zero() {
            (CoefficientInterval::zero(), CoefficientInterval::from_int(1))
        } else {
            sin_cos_interval(&s, bits)
        };
        if u.is_exact_zero() {
            return Ok((sin_s, cos_s, LeviCivita::one(), LeviCivita::zero()));
        }
        // cos u = sum (-1)^k u^{2k} / (2k)!,  sin u = sum (-1)^k u^{2k+1} / (2k+1)!
        let work = bits + SERIES_GUARD_BITS;
        let mut cos_u = LeviCivita::one();
        let mut sin_u = LeviCivita::zero();
        let mut factorial = Rational::one();
        for (k, power) in powers(&u.round_coefficients(work), order, work) {
            factorial *= int(k as i64);
            let sign = if (k / 2) % 2 == 0 { Rational::one() } else { -Rational::one() };
            let term = power.scale(&CoefficientInterval::exact(sign / &factorial));
            if k % 2 == 0 {
                cos_u = &cos_u + &term;
            } else {
                sin_u = &sin_u + &term;
            }
        }
        let (cos_u, sin_u) = (cos_u.truncated(order), sin_u.truncated(order));
        Ok((sin_s, cos_s, cos_u, sin_u))
    }
}

/// Convenience: `pi` as a constant series.
pub fn pi_constant(bits: u32) -> LeviCivita {
    LeviCivita::from_interval(crate::transcendental::pi_interval(bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcf::literal::parse_number;
    use crate::lcf::MagnitudeClass;
    use crate::lcf::Truncation;
    use crate::rational::{parse_decimal, ratio};

    fn lit(s: &str) -> LeviCivita {
        parse_number(s).unwrap()
    }

    #[test]
    fn inverse_examples() {
        let inv = lit("1 - t").inverse(&int(3)).unwrap();
        assert_eq!(inv, &lit("1 + t + t^2") + &LeviCivita::big_o(int(3)));
        assert_eq!(lit("t").inverse(&int(5)).unwrap(), lit("t^-1"));
        assert_eq!(lit("2").inverse(&int(5)).unwrap(), lit("1/2"));
    }

    #[test]
    fn inverse_of_zero_or_unknown_leading() {
        assert!(matches!(LeviCivita::zero().inverse(&int(3)), Err(LcError::ZeroOrUnknownLeading { .. })));
        let straddle = LeviCivita::from_interval(CoefficientInterval::new(int(-1), int(1)).unwrap());
        assert!(matches!(straddle.inverse(&int(3)), Err(LcError::ZeroOrUnknownLeading { .. })));
    }

    #[test]
    fn inverse_times_self_is_one_up_to_order() {
        let a = lit("2t^-1 + 3 - t^1/2 + 5t^2");
        let order = int(4);
        let prod = &a * &a.inverse(&order).unwrap();
        let residual = &prod - &LeviCivita::one();
        assert!(residual.order_bound().map_or(true, |e| e >= order), "{residual}");
    }

    #[test]
    fn sqrt_examples() {
        let r = lit("1 + 2t + t^2").sqrt(&int(4), 64).unwrap();
        assert_eq!(r.terms(), lit("1 + t").terms());
        assert_eq!(lit("4t^2").sqrt(&int(4), 64).unwrap(), lit("2t"));
        let s2 = lit("2").sqrt(&int(4), 64).unwrap();
        let c = &s2.terms()[0].coeff;
        assert!(c.contains(&parse_decimal("1.41421356237309504880").unwrap()));
        assert!(c.width() <= Rational::new(1.into(), crate::rational::pow2(64)));
        assert!(c.square().contains(&int(2)));
    }

    #[test]
    fn sqrt_rejects_nonpositive() {
        assert_eq!(lit("-t").sqrt(&int(4), 32), Err(LcError::NotPositive));
        assert_eq!(LeviCivita::zero().sqrt(&int(4), 32), Err(LcError::NotPositive));
    }

    #[test]
    fn sqrt_squares_back() {
        let a = lit("3t^-2 + 1 + t^1/3");
        let r = a.sqrt(&int(3), 64).unwrap();
        let back = &r * &r;
        let diff = &back - &a;
        // Every surviving coefficient below the truncation encloses zero.
        for term in diff.terms() {
            assert!(term.coeff.contains_zero(), "{term:?}");
        }
    }

    #[test]
    fn cos_examples() {
        assert_eq!(LeviCivita::zero().cos_enclosure(&int(4), 64).unwrap(), LeviCivita::one());
        let c = lit("t").cos_enclosure(&int(4), 64).unwrap();
        assert_eq!(c, &lit("1 - 1/2t^2") + &LeviCivita::big_o(int(4)));
        let c1 = lit("1").cos_enclosure(&int(4), 64).unwrap();
        assert!(c1.terms()[0].coeff.contains(&parse_decimal("0.540302305868139717400936607").unwrap()));
    }

    #[test]
    fn cos_of_appreciable_plus_infinitesimal() {
        // cos(1 + t) = cos 1 - sin 1 t - cos 1 t^2 / 2 + ...
        let c = lit("1 + t").cos_enclosure(&int(3), 64).unwrap();
        let t1 = c.coefficient(&int(1)).unwrap();
        assert!(t1.contains(&-parse_decimal("0.841470984807896506652502321").unwrap()));
        let t2 = c.coefficient(&int(2)).unwrap();
        assert!(t2.contains(&-parse_decimal("0.270151152934069858700468303").unwrap()));
    }

    #[test]
    fn cos_requires_finite_argument() {
        assert_eq!(lit("t^-1").cos_enclosure(&int(4), 64), Err(LcError::NotFinite));
    }

    #[test]
    fn trig_identity_at_exponent_zero() {
        for s in ["1", "3/2 + t", "-7/3 + 2t^1/2"] {
            let a = lit(s);
            let c = a.cos_enclosure(&int(3), 48).unwrap();
            let sn = a.sin_enclosure(&int(3), 48).unwrap();
            let sum = &(&c * &c) + &(&sn * &sn);
            let st = sum.standard_part().unwrap();
            assert!(st.contains(&int(1)), "{s}: {st}");
            assert_eq!(sum.classify_magnitude(), MagnitudeClass::Appreciable);
        }
    }

    #[test]
    fn division() {
        let q = lit("1 - t^2").div(&lit("1 + t"), &int(6)).unwrap();
        assert_eq!(q.terms(), lit("1 - t").terms());
        assert_eq!(q.truncation(), &Truncation::Finite(int(6)));
        assert_eq!(lit("1").div(&lit("3"), &int(2)).unwrap(), LeviCivita::from_rational(ratio(1, 3)));
    }
}
