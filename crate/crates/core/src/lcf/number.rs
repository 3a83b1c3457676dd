use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::interval::CoefficientInterval;
use crate::rational::{self, Rational};

/// Exponent bound of the unknown remainder `O(t^T)`; `Infinite` means the
/// series is complete.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Truncation {
    Finite(Rational),
    Infinite,
}

impl Truncation {
    pub fn is_finite(&self) -> bool {
        matches!(self, Truncation::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Truncation::Finite(q) => Some(q),
            Truncation::Infinite => None,
        }
    }

    pub fn shift(&self, by: &Rational) -> Truncation {
        match self {
            Truncation::Finite(q) => Truncation::Finite(q + by),
            Truncation::Infinite => Truncation::Infinite,
        }
    }

    /// `true` when every exponent `e` with `e >= self` also satisfies `e > q`.
    pub(crate) fn exceeds(&self, q: &Rational) -> bool {
        match self {
            Truncation::Finite(t) => t > q,
            Truncation::Infinite => true,
        }
    }

    pub(crate) fn admits(&self, exponent: &Rational) -> bool {
        match self {
            Truncation::Finite(t) => exponent < t,
            Truncation::Infinite => true,
        }
    }
}

impl From<Rational> for Truncation {
    fn from(q: Rational) -> Self {
        Truncation::Finite(q)
    }
}

/// One monomial `coeff * t^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub exponent: Rational,
    pub coeff: CoefficientInterval,
}

impl Term {
    pub fn new(exponent: Rational, coeff: CoefficientInterval) -> Self {
        Self { exponent, coeff }
    }
}

/// A finite truncated Levi-Civita series `sum c_i t^{q_i} + O(t^T)` in a fixed
/// positive infinitesimal `t`, with rational exponents and rational-interval
/// coefficients.
///
/// Construction always normalizes: exponents strictly increase and lie below
/// the truncation order, no coefficient is exactly zero, and a coefficient
/// whose sign is undecidable can only occur in the leading position (a later
/// one is absorbed into the remainder, which is a weaker and still sound
/// statement).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeviCivita {
    terms: Vec<Term>,
    truncation: Truncation,
}

impl LeviCivita {
    pub fn from_terms(terms: Vec<Term>, truncation: Truncation) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| a.exponent.cmp(&b.exponent));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for term in terms {
            match merged.last_mut() {
                Some(last) if last.exponent == term.exponent => {
                    last.coeff = &last.coeff + &term.coeff;
                }
                _ => merged.push(term),
            }
        }
        let mut truncation = truncation;
        let mut out: Vec<Term> = Vec::with_capacity(merged.len());
        for term in merged {
            if !truncation.admits(&term.exponent) {
                break;
            }
            if term.coeff.is_zero() {
                continue;
            }
            if !out.is_empty() && term.coeff.straddles_zero() {
                truncation = Truncation::Finite(term.exponent);
                break;
            }
            out.push(term);
        }
        Self { terms: out, truncation }
    }

    pub fn zero() -> Self {
        Self { terms: Vec::new(), truncation: Truncation::Infinite }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `0 + O(t^order)`.
    pub fn big_o(order: Rational) -> Self {
        Self { terms: Vec::new(), truncation: Truncation::Finite(order) }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rational::int(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::monomial(CoefficientInterval::exact(q), Rational::zero())
    }

    pub fn from_interval(c: CoefficientInterval) -> Self {
        Self::monomial(c, Rational::zero())
    }

    pub fn monomial(coeff: CoefficientInterval, exponent: Rational) -> Self {
        Self::from_terms(vec![Term::new(exponent, coeff)], Truncation::Infinite)
    }

    /// The canonical infinitesimal `t^exponent` with coefficient 1.
    pub fn t_pow(exponent: Rational) -> Self {
        Self::monomial(CoefficientInterval::from_int(1), exponent)
    }

    /// The positive infinitesimal `t`.
    pub fn t() -> Self {
        Self::t_pow(Rational::one())
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn truncation(&self) -> &Truncation {
        &self.truncation
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// A lower bound on the true order of the value: the first stored
    /// exponent, or the truncation order when nothing is stored (`None` for
    /// exact zero).
    pub fn order_bound(&self) -> Option<Rational> {
        match self.terms.first() {
            Some(t) => Some(t.exponent.clone()),
            None => self.truncation.finite().cloned(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.truncation == Truncation::Infinite && self.terms.iter().all(|t| t.coeff.is_exact())
    }

    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.truncation == Truncation::Infinite
    }

    /// The coefficient interval at `exponent` (zero when absent and decidable,
    /// `None` when the exponent lies in the unknown remainder).
    pub fn coefficient(&self, exponent: &Rational) -> Option<CoefficientInterval> {
        if !self.truncation.admits(exponent) {
            return None;
        }
        Some(
            self.terms
                .iter()
                .find(|t| &t.exponent == exponent)
                .map(|t| t.coeff.clone())
                .unwrap_or_else(CoefficientInterval::zero),
        )
    }

    /// Drops everything at or above `order`.
    pub fn truncated(&self, order: &Rational) -> Self {
        let truncation = self.truncation.clone().min(Truncation::Finite(order.clone()));
        Self::from_terms(self.terms.clone(), truncation)
    }

    /// Rounds every inexact coefficient outward to about `bits` significant
    /// bits, keeping rational sizes bounded through long products.
    pub fn round_coefficients(&self, bits: u32) -> Self {
        if self.terms.iter().all(|t| t.coeff.is_exact()) {
            return self.clone();
        }
        let terms = self.terms.iter().map(|t| Term::new(t.exponent.clone(), t.coeff.round_relative(bits))).collect();
        Self::from_terms(terms, self.truncation.clone())
    }

    /// Multiplies by `t^by`.
    pub fn shift_exponents(&self, by: &Rational) -> Self {
        Self {
            terms: self.terms.iter().map(|t| Term::new(&t.exponent + by, t.coeff.clone())).collect(),
            truncation: self.truncation.shift(by),
        }
    }

    pub fn scale(&self, c: &CoefficientInterval) -> Self {
        let terms = self.terms.iter().map(|t| Term::new(t.exponent.clone(), &t.coeff * c)).collect();
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(terms, self.truncation.clone())
    }

    /// Keeps only the terms with exponent `<= max_exponent` (exactly, no
    /// remainder added). Used to split off standard parts.
    pub(crate) fn terms_up_to(&self, max_exponent: &Rational) -> Vec<Term> {
        self.terms.iter().filter(|t| &t.exponent <= max_exponent).cloned().collect()
    }

    /// The same value with every coefficient replaced by its interval midpoint.
    pub fn midpoint_form(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.exponent.clone(), CoefficientInterval::exact(t.coeff.midpoint())))
            .collect();
        Self::from_terms(terms, self.truncation.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for LeviCivita {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for LeviCivita {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for LeviCivita {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for &LeviCivita {
    type Output = LeviCivita;
    fn add(self, rhs: Self) -> LeviCivita {
        let truncation = self.truncation.clone().min(rhs.truncation.clone());
        let terms = self.terms.iter().chain(rhs.terms.iter()).cloned().collect();
        LeviCivita::from_terms(terms, truncation)
    }
}

impl Neg for &LeviCivita {
    type Output = LeviCivita;
    fn neg(self) -> LeviCivita {
        LeviCivita {
            terms: self.terms.iter().map(|t| Term::new(t.exponent.clone(), -&t.coeff)).collect(),
            truncation: self.truncation.clone(),
        }
    }
}

impl Neg for LeviCivita {
    type Output = LeviCivita;
    fn neg(self) -> LeviCivita {
        -&self
    }
}

impl Sub for &LeviCivita {
    type Output = LeviCivita;
    fn sub(self, rhs: Self) -> LeviCivita {
        self + &(-rhs)
    }
}

impl Mul for &LeviCivita {
    type Output = LeviCivita;
    /// Cauchy product. The remainder order is
    /// `min(T_a + order(b), T_b + order(a))`, where `order(.)` is the
    /// smallest exponent the value can have.
    fn mul(self, rhs: Self) -> LeviCivita {
        if self.is_exact_zero() || rhs.is_exact_zero() {
            return LeviCivita::zero();
        }
        let lead_a = self.order_bound();
        let lead_b = rhs.order_bound();
        let via_a = match &lead_b {
            Some(lb) => self.truncation.shift(lb),
            None => Truncation::Infinite,
        };
        let via_b = match &lead_a {
            Some(la) => rhs.truncation.shift(la),
            None => Truncation::Infinite,
        };
        // O(t^Ta) * O(t^Tb) is covered by either bound.
        let truncation = via_a.min(via_b);
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                let exponent = &a.exponent + &b.exponent;
                if truncation.admits(&exponent) {
                    terms.push(Term::new(exponent, &a.coeff * &b.coeff));
                }
            }
        }
        LeviCivita::from_terms(terms, truncation)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LeviCivita {
            type Output = LeviCivita;
            fn $m(self, rhs: Self) -> LeviCivita {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LeviCivita> for LeviCivita {
            type Output = LeviCivita;
            fn $m(self, rhs: &LeviCivita) -> LeviCivita {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Zero for LeviCivita {
    fn zero() -> Self {
        LeviCivita::zero()
    }
    fn is_zero(&self) -> bool {
        self.is_exact_zero()
    }
}

impl fmt::Display for LeviCivita {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::literal::format_number(self, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn lit(s: &str) -> LeviCivita {
        super::super::literal::parse_number(s).unwrap()
    }

    #[test]
    fn addition_cancels() {
        assert_eq!(&lit("1 + t") + &lit("1 - t"), LeviCivita::from_int(2));
    }

    #[test]
    fn addition_keeps_disjoint_exponents() {
        let sum = &lit("t^-1") + &lit("1");
        assert_eq!(sum.terms().len(), 2);
        assert_eq!(sum, lit("t^-1 + 1"));
    }

    #[test]
    fn truncation_dominates_sums() {
        let a = &LeviCivita::one() + &LeviCivita::big_o(int(3));
        let sum = &a + &lit("t^5");
        assert_eq!(sum.terms().len(), 1);
        assert_eq!(sum.truncation(), &Truncation::Finite(int(3)));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&lit("1 + t") * &lit("1 - t"), lit("1 - t^2"));
        assert_eq!(&lit("t^1/2") * &lit("t^1/2"), LeviCivita::t());
        assert_eq!(&LeviCivita::zero() * &lit("t^-1"), LeviCivita::zero());
        assert!((&LeviCivita::zero() * &LeviCivita::big_o(int(-3))).is_exact_zero());
    }

    #[test]
    fn multiplication_truncation_rule() {
        // (1 + O(t^2)) * (t^-1 + 3) = t^-1 + 3 + O(t^1)
        let a = &LeviCivita::one() + &LeviCivita::big_o(int(2));
        let p = &a * &lit("t^-1 + 3");
        assert_eq!(p.truncation(), &Truncation::Finite(int(1)));
        assert_eq!(p.terms().len(), 2);
        // O(t^-1) * O(t^-1) = O(t^-2)
        let q = &LeviCivita::big_o(int(-1)) * &LeviCivita::big_o(int(-1));
        assert_eq!(q.truncation(), &Truncation::Finite(int(-2)));
    }

    #[test]
    fn later_straddling_term_becomes_remainder() {
        let straddle = CoefficientInterval::new(int(-1), int(1)).unwrap();
        let x = LeviCivita::from_terms(
            vec![
                Term::new(int(0), CoefficientInterval::from_int(2)),
                Term::new(int(1), straddle.clone()),
                Term::new(int(2), CoefficientInterval::from_int(5)),
            ],
            Truncation::Infinite,
        );
        assert_eq!(x.terms().len(), 1);
        assert_eq!(x.truncation(), &Truncation::Finite(int(1)));
        // In leading position it is kept.
        let y = LeviCivita::from_terms(vec![Term::new(int(0), straddle)], Truncation::Infinite);
        assert_eq!(y.terms().len(), 1);
    }

    #[test]
    fn shifting_and_scaling() {
        let x = lit("1 + 2t").shift_exponents(&ratio(-1, 2));
        assert_eq!(x, lit("t^-1/2 + 2t^1/2"));
        assert_eq!(lit("1 + t").scale(&CoefficientInterval::exact(ratio(1, 2))), lit("1/2 + 1/2t"));
        assert_eq!(lit("1 + t").pow(2), lit("1 + 2t + t^2"));
    }

    #[test]
    fn coefficient_lookup() {
        let x = &lit("3 + t") + &LeviCivita::big_o(int(2));
        assert_eq!(x.coefficient(&int(0)), Some(CoefficientInterval::from_int(3)));
        assert_eq!(x.coefficient(&ratio(1, 2)), Some(CoefficientInterval::zero()));
        assert_eq!(x.coefficient(&int(2)), None);
    }
}
