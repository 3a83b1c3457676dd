//! Rigorous rational enclosures of `sqrt`, `sin`, `cos` and `pi`.
//!
//! Every routine computes an internal enclosure well below the requested
//! width and then rounds it outward onto the dyadic grid of `2^-(bits + 2)`.
//! Rounding a narrower internal enclosure onto a finer grid can only shrink
//! the output, so raising `bits` never widens a result.

use num_traits::{One, Signed, Zero};

use crate::interval::CoefficientInterval;
use crate::rational::{self, dyadic_floor, exact_sqrt, int, Rational};

/// Extra bits carried by the internal computation.
const GUARD_BITS: u32 = 16;

fn output_bits(bits: u32) -> u32 {
    bits + 2
}

fn internal_target(bits: u32) -> Rational {
    Rational::new(1.into(), rational::pow2(bits + 8))
}

/// Enclosure of `sqrt(x)` for `x` with a strictly positive lower bound,
/// refined by the interval Newton operator `N(X) = m - (m^2 - x) / 2X`.
///
/// Exact perfect squares come back exact. Returns `None` when `x.lo() <= 0`.
pub fn sqrt_interval(x: &CoefficientInterval, bits: u32) -> Option<CoefficientInterval> {
    if !x.lo().is_positive() {
        return None;
    }
    if let Some(q) = x.as_exact() {
        if let Some(root) = exact_sqrt(q) {
            return Some(CoefficientInterval::exact(root));
        }
    }
    let work = bits + GUARD_BITS;
    let one = Rational::one();
    // sqrt(y) lies between y and 1 for every y > 0.
    let mut current =
        CoefficientInterval::new(rational::min_ref(x.lo(), &one).clone(), rational::max_ref(x.hi(), &one).clone())?
            .round_outward(work);
    let target = internal_target(bits);
    for _ in 0..(4 * bits + 256) {
        if current.width() <= target {
            break;
        }
        let m = dyadic_floor(&current.midpoint(), work);
        let m_sq = &m * &m;
        let residual = CoefficientInterval::new(&m_sq - x.hi(), &m_sq - x.lo())?;
        let slope = current.scale(&int(2)).recip()?;
        let newton = &CoefficientInterval::exact(m) - &(&residual * &slope);
        // An empty intersection cannot happen for a valid enclosure.
        let next = current.intersect(&newton)?.round_outward(work).intersect(&current)?;
        if next == current {
            break;
        }
        current = next;
    }
    Some(current.round_outward(output_bits(bits)))
}

/// Sums the Taylor series of `sin` and `cos` at an exact rational with
/// `|m| <= 4`, returning `(sin, cos)` enclosures including the Lagrange bound.
fn sin_cos_taylor(m: &Rational, bits: u32) -> (CoefficientInterval, CoefficientInterval) {
    if m.is_zero() {
        return (CoefficientInterval::zero(), CoefficientInterval::from_int(1));
    }
    let target = internal_target(bits) / int(4);
    let mut sin = Rational::zero();
    let mut cos = Rational::zero();
    // term = m^k / k!
    let mut term = Rational::one();
    let mut k: u64 = 0;
    loop {
        match k % 4 {
            0 => cos += &term,
            1 => sin += &term,
            2 => cos -= &term,
            _ => sin -= &term,
        }
        k += 1;
        term = term * m / Rational::from_integer(k.into());
        // |m|^k / k! bounds the remainder of both truncated series.
        if term.abs() <= target {
            break;
        }
    }
    let remainder = term.abs();
    (CoefficientInterval::around(&sin, &remainder), CoefficientInterval::around(&cos, &remainder))
}

fn clamp_unit(x: CoefficientInterval) -> CoefficientInterval {
    let one = Rational::one();
    let lo = rational::max_ref(x.lo(), &-&one).clone();
    let hi = rational::min_ref(x.hi(), &one).clone();
    CoefficientInterval::new(lo, hi).unwrap_or(x)
}

/// Enclosures of `(sin x, cos x)` for every `x` in the interval `arg`.
///
/// Both functions are 1-Lipschitz, so evaluating at the midpoint and widening
/// by the half-width is sound. Large arguments are first reduced by `2 pi`.
pub fn sin_cos_interval(arg: &CoefficientInterval, bits: u32) -> (CoefficientInterval, CoefficientInterval) {
    let work = bits + GUARD_BITS;
    let mut center = arg.midpoint();
    let mut radius = arg.width() / int(2);
    let four = int(4);
    if center.abs() > four {
        let pi = pi_interval(work + center.abs().to_integer().bits() as u32);
        let two_pi_mid = pi.midpoint() * int(2);
        let k = (&center / &two_pi_mid).round();
        let shift = pi.scale(&(k * int(2)));
        let reduced = &CoefficientInterval::exact(center.clone()) - &shift;
        center = reduced.midpoint();
        radius += reduced.width() / int(2);
    }
    if !center.is_integer() {
        let rounded = dyadic_floor(&center, work);
        radius += &center - &rounded;
        center = rounded;
    }
    let (sin, cos) = sin_cos_taylor(&center, bits);
    let widen = |x: CoefficientInterval| {
        if radius.is_zero() {
            x
        } else {
            CoefficientInterval::new(x.lo() - &radius, x.hi() + &radius).unwrap_or(x)
        }
    };
    let out = output_bits(bits);
    (clamp_unit(widen(sin)).round_outward(out), clamp_unit(widen(cos)).round_outward(out))
}

pub fn cos_interval(arg: &CoefficientInterval, bits: u32) -> CoefficientInterval {
    sin_cos_interval(arg, bits).1
}

pub fn sin_interval(arg: &CoefficientInterval, bits: u32) -> CoefficientInterval {
    sin_cos_interval(arg, bits).0
}

/// Nested bracket `[min(S_n, S_{n+1}), max(..)]` around `arctan(1/x)`, where
/// `S_n` is the n-th partial sum of the alternating Gregory series.
fn arctan_recip_bracket(x: i64, terms: usize) -> CoefficientInterval {
    let x = int(x);
    let x_sq = &x * &x;
    let mut power = x.clone();
    let mut sum = Rational::zero();
    let mut previous = sum.clone();
    for k in 0..=terms {
        previous = sum.clone();
        let term = Rational::one() / (&power * int(2 * k as i64 + 1));
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x_sq;
    }
    let lo = rational::min_ref(&previous, &sum).clone();
    let hi = rational::max_ref(&previous, &sum).clone();
    CoefficientInterval::new(lo, hi).expect("ordered by construction")
}

/// Enclosure of `pi` of width at most `2^-bits`, from Machin's formula
/// `pi = 16 arctan(1/5) - 4 arctan(1/239)`.
///
/// The term count is nondecreasing in `bits`, so enclosures at increasing
/// precision are nested.
pub fn pi_interval(bits: u32) -> CoefficientInterval {
    // The k-th Gregory term of arctan(1/5) is below 5^-(2k+1); scaled by 16 it
    // drops under 2^-(bits+8) once (2k+1) log2(5) >= bits + 12.
    let log2_5 = 2.321_928_094_887_362_f64;
    let terms = ((f64::from(bits + 12) / log2_5 - 1.0) / 2.0).ceil().max(1.0) as usize;
    let a = arctan_recip_bracket(5, terms);
    let b = arctan_recip_bracket(239, terms);
    let pi = &a.scale(&int(16)) - &b.scale(&int(4));
    pi.round_outward(output_bits(bits))
}
