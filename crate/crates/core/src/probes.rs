//! Seeded generators for exact test values and per-space probe sets.

use rand::Rng;

use crate::hull::{parse_point, ExtendedPoint, SpaceId};
use crate::interval::CoefficientInterval;
use crate::lcf::{LeviCivita, Precision, Term, Truncation};
use crate::rational::{ratio, Rational};

/// `n/d` with `|n| <= max_num` and `1 <= d <= max_den`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    ratio(rng.random_range(-max_num..=max_num), rng.random_range(1..=max_den))
}

fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    let n = rng.random_range(1..=max_num);
    let n = if rng.random_bool(0.5) { n } else { -n };
    ratio(n, rng.random_range(1..=max_den))
}

/// Exponent `k/d` in `(lo, hi]` with `d` in `1..=3`.
fn exponent<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    let d = rng.random_range(1..=3);
    ratio(rng.random_range(lo * d + 1..=hi * d), d)
}

fn series<R: Rng + ?Sized>(rng: &mut R, terms: usize, lo: i64, hi: i64) -> Vec<Term> {
    (0..terms)
        .map(|_| Term::new(exponent(rng, lo, hi), CoefficientInterval::exact(nonzero_rational(rng, 9, 6))))
        .collect()
}

/// A nonzero exact infinitesimal with up to three terms.
pub fn random_infinitesimal<R: Rng + ?Sized>(rng: &mut R) -> LeviCivita {
    let n = rng.random_range(1..=3);
    loop {
        let x = LeviCivita::from_terms(series(rng, n, 0, 3), Truncation::Infinite);
        if !x.is_exact_zero() {
            return x;
        }
    }
}

/// An exact finite number: a standard part (zero a quarter of the time) plus
/// an infinitesimal tail.
pub fn random_finite<R: Rng + ?Sized>(rng: &mut R) -> LeviCivita {
    let st = if rng.random_bool(0.25) { Rational::from_integer(0.into()) } else { nonzero_rational(rng, 20, 8) };
    let tail = rng.random_range(0..=3);
    let mut terms = series(rng, tail, 0, 3);
    terms.push(Term::new(Rational::from_integer(0.into()), CoefficientInterval::exact(st)));
    LeviCivita::from_terms(terms, Truncation::Infinite)
}

/// An exact number with exponents in `(-3, 3]`, so possibly infinite.
pub fn random_exact<R: Rng + ?Sized>(rng: &mut R) -> LeviCivita {
    let n = rng.random_range(0..=4);
    LeviCivita::from_terms(series(rng, n, -3, 3), Truncation::Infinite)
}

/// A positive appreciable number with standard part in `[1/4, 4]`.
fn random_appreciable_radius<R: Rng + ?Sized>(rng: &mut R) -> LeviCivita {
    let st = LeviCivita::from_rational(ratio(rng.random_range(4..=64), 16));
    if rng.random_bool(0.5) {
        &st + &random_infinitesimal(rng)
    } else {
        st
    }
}

fn positive_infinitesimal<R: Rng + ?Sized>(rng: &mut R) -> LeviCivita {
    let x = random_infinitesimal(rng);
    match x.sign() {
        Ok(std::cmp::Ordering::Less) => -x,
        _ => x,
    }
}

fn point(space: SpaceId, coords: Vec<LeviCivita>) -> ExtendedPoint {
    ExtendedPoint::new(space, coords).expect("generated probe is valid")
}

/// `n` random probes of `space`, all in the galaxy of the basepoint.
///
/// Cover probes mix nearstandard points, points of the origin halo and
/// finite points with infinite angle.
pub fn space_probes<R: Rng + ?Sized>(space: SpaceId, n: usize, rng: &mut R) -> Vec<ExtendedPoint> {
    (0..n)
        .map(|i| match space {
            SpaceId::RationalsLine => point(space, vec![random_finite(rng)]),
            SpaceId::EuclideanPlane => point(space, vec![random_finite(rng), random_finite(rng)]),
            SpaceId::Cover | SpaceId::CoverCompletion => {
                let zeta = random_finite(rng);
                match i % 4 {
                    0 | 1 => point(space, vec![random_appreciable_radius(rng), zeta]),
                    2 => point(space, vec![positive_infinitesimal(rng), zeta]),
                    _ => {
                        let k = rng.random_range(1..=3);
                        let infinite = &zeta
                            + &LeviCivita::monomial(
                                CoefficientInterval::exact(nonzero_rational(rng, 5, 2)),
                                ratio(-k, rng.random_range(1..=2)),
                            );
                        point(space, vec![random_appreciable_radius(rng), infinite])
                    }
                }
            }
        })
        .collect()
}

/// The fixed witnesses used by the theorem harnesses.
pub fn witness_probes(space: SpaceId, precision: &Precision) -> Vec<ExtendedPoint> {
    let srcs: &[&str] = match space {
        SpaceId::RationalsLine => &["sqrt(2) + t"],
        SpaceId::EuclideanPlane => &["(sqrt(2) + t, -t^2)"],
        SpaceId::Cover => &["(t, 0)", "(1, t^-1)"],
        SpaceId::CoverCompletion => &["origin", "(t, 0)", "(1, t^-1)"],
    };
    srcs.iter().map(|s| parse_point(space, s, precision).expect("witness literal")).collect()
}
