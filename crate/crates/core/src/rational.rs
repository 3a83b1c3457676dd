//! Arbitrary-precision rationals and the small toolkit built on them:
//! dyadic outward rounding, decimal rendering and literal parsing.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

/// Largest multiple of `2^-bits` that is `<= q`.
pub fn dyadic_floor(q: &Rational, bits: u32) -> Rational {
    let scaled = q * Rational::from_integer(pow2(bits));
    Rational::new(scaled.floor().to_integer(), pow2(bits))
}

/// Smallest multiple of `2^-bits` that is `>= q`.
pub fn dyadic_ceil(q: &Rational, bits: u32) -> Rational {
    let scaled = q * Rational::from_integer(pow2(bits));
    Rational::new(scaled.ceil().to_integer(), pow2(bits))
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Huge numerators/denominators: fall back to a scaled quotient.
        let n = q.numer().bits() as i64;
        let d = q.denom().bits() as i64;
        let shift = (n - d - 60).max(0) as u32;
        let scaled = (q / Rational::from_integer(pow2(shift))).round().to_integer();
        scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
    })
}

/// Exact rational value of a finite `f64`.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Exact square root when both numerator and denominator are perfect squares.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Renders `q` as a decimal with `digits` fractional digits, rounded toward
/// negative infinity (`round_up = false`) or positive infinity.
pub fn to_decimal(q: &Rational, digits: u32, round_up: bool) -> String {
    let scale = Rational::from_integer(BigInt::from(10u32).pow(digits));
    let scaled = q * scale;
    let n = if round_up { scaled.ceil().to_integer() } else { scaled.floor().to_integer() };
    let negative = n.sign() == Sign::Minus;
    let mag = n.abs().to_string();
    let width = digits as usize + 1;
    let padded = format!("{mag:0>width$}");
    let (whole, frac) = padded.split_at(padded.len() - digits as usize);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac}")
    }
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `n`, `-n` or `n/d` (no whitespace).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Parses a decimal literal such as `-1.25` exactly.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some(q) = parse_rational(s) {
        return Some(q);
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.')?;
    if frac.is_empty() && whole.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let q = Rational::new(n, BigInt::from(10u32).pow(frac.len() as u32));
    Some(if neg { -q } else { q })
}

pub fn min_ref<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn max_ref<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if a >= b {
        a
    } else {
        b
    }
}

/// `floor(q)` as an integer.
pub fn floor_int(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_rounding_brackets() {
        let third = ratio(1, 3);
        let lo = dyadic_floor(&third, 10);
        let hi = dyadic_ceil(&third, 10);
        assert!(lo < third && third < hi);
        assert_eq!(&hi - &lo, ratio(1, 1024));
        assert_eq!(dyadic_floor(&ratio(3, 4), 2), ratio(3, 4));
        assert_eq!(dyadic_floor(&ratio(-1, 3), 1), ratio(-1, 2));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&ratio(1, 3), 4, false), "0.3333");
        assert_eq!(to_decimal(&ratio(1, 3), 4, true), "0.3334");
        assert_eq!(to_decimal(&ratio(-5, 4), 2, false), "-1.25");
        assert_eq!(to_decimal(&ratio(-1, 3), 2, false), "-0.34");
        assert_eq!(to_decimal(&int(7), 0, false), "7");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("3/2"), Some(ratio(3, 2)));
        assert_eq!(parse_rational("-4/6"), Some(ratio(-2, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_decimal("0.125"), Some(ratio(1, 8)));
        assert_eq!(parse_decimal("-2.5"), Some(ratio(-5, 2)));
        assert_eq!(parse_decimal("abc"), None);
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(exact_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(exact_sqrt(&int(2)), None);
        assert_eq!(exact_sqrt(&int(-4)), None);
    }

    #[test]
    fn f64_conversion() {
        assert_eq!(to_f64(&ratio(1, 4)), 0.25);
        assert_eq!(from_f64(0.5), Some(ratio(1, 2)));
    }
}
