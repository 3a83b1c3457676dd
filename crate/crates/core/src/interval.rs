//! Closed rational intervals used as series coefficients.
//!
//! Exact coefficients are the degenerate case `lo == hi`; everything produced
//! by `sqrt`, `cos` or `pi` is a genuine enclosure of the true real value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::rational::{self, dyadic_ceil, dyadic_floor, fmt_rational, max_ref, min_ref, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientInterval {
    lo: Rational,
    hi: Rational,
}

impl CoefficientInterval {
    /// Builds `[lo, hi]`, returning `None` when `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Option<Self> {
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn exact(q: Rational) -> Self {
        Self { lo: q.clone(), hi: q }
    }

    pub fn zero() -> Self {
        Self::exact(Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(rational::int(n))
    }

    /// `center ± radius`; `radius` must be nonnegative.
    pub fn around(center: &Rational, radius: &Rational) -> Self {
        debug_assert!(!radius.is_negative());
        Self { lo: center - radius, hi: center + radius }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The exact value, when the interval is degenerate.
    pub fn as_exact(&self) -> Option<&Rational> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rational::int(2)
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// Contains zero without being exactly zero: the sign is undecidable.
    pub fn straddles_zero(&self) -> bool {
        self.contains_zero() && !self.is_zero()
    }

    /// `Some(sign)` when every point of the interval has the same sign.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        Self::new(max_ref(&self.lo, &other.lo).clone(), min_ref(&self.hi, &other.hi).clone())
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self { lo: min_ref(&self.lo, &other.lo).clone(), hi: max_ref(&self.hi, &other.hi).clone() }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let a = &self.lo * q;
        let b = &self.hi * q;
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    /// `1 / self`, or `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(Self { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    /// Interval of `x^2` for `x` in `self` (tighter than `self * self`).
    pub fn square(&self) -> Self {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            Self { lo: Rational::zero(), hi: max_ref(&a, &b).clone() }
        } else if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    /// `{|x| : x in self}`.
    pub fn abs(&self) -> Self {
        if self.lo.is_negative() && self.hi.is_positive() {
            Self { lo: Rational::zero(), hi: max_ref(&-&self.lo, &self.hi).clone() }
        } else if self.hi.is_negative() || (self.hi.is_zero() && self.lo.is_negative()) {
            -self
        } else {
            self.clone()
        }
    }

    /// Rounds the endpoints outward to multiples of `2^-bits`.
    pub fn round_outward(&self, bits: u32) -> Self {
        if self.is_exact() && (&self.lo * Rational::from_integer(rational::pow2(bits))).is_integer() {
            return self.clone();
        }
        Self { lo: dyadic_floor(&self.lo, bits), hi: dyadic_ceil(&self.hi, bits) }
    }

    /// Outward rounding that keeps about `bits` significant bits of the
    /// larger endpoint. Exact values are left alone.
    pub fn round_relative(&self, bits: u32) -> Self {
        if self.is_exact() {
            return self.clone();
        }
        let (a, b) = (self.lo.abs(), self.hi.abs());
        let m = if a > b { a } else { b };
        if m.is_zero() {
            return self.clone();
        }
        let magnitude = m.numer().bits() as i64 - m.denom().bits() as i64;
        let grid = (bits as i64 - magnitude).max(0) as u32;
        self.round_outward(grid)
    }

    /// Decimal rendering with outward-rounded endpoints.
    pub fn to_decimal(&self, digits: u32) -> String {
        match self.as_exact() {
            Some(q) if q.is_integer() => q.to_string(),
            _ => format!(
                "[{}, {}]",
                rational::to_decimal(&self.lo, digits, false),
                rational::to_decimal(&self.hi, digits, true)
            ),
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational::to_f64(&self.midpoint())
    }
}

impl From<Rational> for CoefficientInterval {
    fn from(q: Rational) -> Self {
        Self::exact(q)
    }
}

impl fmt::Display for CoefficientInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_exact() {
            Some(q) => f.write_str(&fmt_rational(q)),
            None => write!(f, "[{}, {}]", fmt_rational(&self.lo), fmt_rational(&self.hi)),
        }
    }
}

impl Add for &CoefficientInterval {
    type Output = CoefficientInterval;
    fn add(self, rhs: Self) -> CoefficientInterval {
        CoefficientInterval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &CoefficientInterval {
    type Output = CoefficientInterval;
    fn sub(self, rhs: Self) -> CoefficientInterval {
        CoefficientInterval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Neg for &CoefficientInterval {
    type Output = CoefficientInterval;
    fn neg(self) -> CoefficientInterval {
        CoefficientInterval { lo: -&self.hi, hi: -&self.lo }
    }
}

impl Neg for CoefficientInterval {
    type Output = CoefficientInterval;
    fn neg(self) -> CoefficientInterval {
        CoefficientInterval { lo: -self.hi, hi: -self.lo }
    }
}

impl Mul for &CoefficientInterval {
    type Output = CoefficientInterval;
    fn mul(self, rhs: Self) -> CoefficientInterval {
        if let Some(q) = rhs.as_exact() {
            return self.scale(q);
        }
        if let Some(q) = self.as_exact() {
            return rhs.scale(q);
        }
        let products = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = products.iter().min().cloned().unwrap_or_default();
        let hi = products.iter().max().cloned().unwrap_or_default();
        CoefficientInterval { lo, hi }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CoefficientInterval {
            type Output = CoefficientInterval;
            fn $m(self, rhs: Self) -> CoefficientInterval {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
