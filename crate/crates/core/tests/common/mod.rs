#![allow(dead_code)]

use ihull_core::cover::CoverPoint;
use ihull_core::lcf::Term;
use ihull_core::rational::ratio;
use ihull_core::{CoefficientInterval, LeviCivita, Truncation};
use proptest::prelude::*;

fn build(terms: Vec<(i64, i64, i64, i64)>) -> LeviCivita {
    let terms = terms
        .into_iter()
        .map(|(n, d, e, ed)| Term::new(ratio(e, ed), CoefficientInterval::exact(ratio(n, d))))
        .collect();
    LeviCivita::from_terms(terms, Truncation::Infinite)
}

/// Exact values with exponents in [-2, 3].
pub fn exact() -> impl Strategy<Value = LeviCivita> {
    prop::collection::vec((-9i64..=9, 1i64..=6, -6i64..=9, 1i64..=3), 0..5).prop_map(build)
}

/// Exact finite values: exponents in [0, 3].
pub fn finite() -> impl Strategy<Value = LeviCivita> {
    prop::collection::vec((-9i64..=9, 1i64..=6, 0i64..=9, 1i64..=3), 0..5).prop_map(build)
}

/// Exact values with only positive exponents (possibly zero).
pub fn infinitesimal() -> impl Strategy<Value = LeviCivita> {
    prop::collection::vec((-9i64..=9, 1i64..=6, 1i64..=9, 1i64..=3), 0..4).prop_map(build)
}

pub fn nonzero_exact() -> impl Strategy<Value = LeviCivita> {
    exact().prop_filter("nonzero", |x| !x.is_exact_zero())
}

/// Standard exact cover points with r in (0, 4] and zeta in [-8, 8].
pub fn standard_cover_point() -> impl Strategy<Value = CoverPoint> {
    (1i64..=64, -128i64..=128).prop_map(|(r, z)| {
        CoverPoint::new(LeviCivita::from_rational(ratio(r, 16)), LeviCivita::from_rational(ratio(z, 16))).unwrap()
    })
}
