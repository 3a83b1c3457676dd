mod common;

use std::cmp::Ordering;

use common::{exact, finite, infinitesimal, nonzero_exact};
use ihull_core::rational::int;
use ihull_core::{CoefficientInterval, LeviCivita, MagnitudeClass};
use proptest::prelude::*;

proptest! {
    #[test]
    fn addition_is_a_commutative_group(a in exact(), b in exact(), c in exact()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &LeviCivita::zero(), a.clone());
        prop_assert!((&a - &a).is_exact_zero());
    }

    #[test]
    fn multiplication_laws(a in exact(), b in exact(), c in exact()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LeviCivita::one(), a.clone());
    }

    #[test]
    fn inverse_residual_is_beyond_the_order(a in nonzero_exact()) {
        let order = int(6);
        let inv = a.inverse(&order).unwrap();
        let residual = &(&a * &inv) - &LeviCivita::one();
        let bound = residual.order_bound();
        prop_assert!(bound.map_or(true, |q| q >= order), "{residual}");
    }

    #[test]
    fn order_is_total_and_transitive(a in exact(), b in exact(), c in exact()) {
        let ab = a.compare(&b).unwrap();
        prop_assert_eq!(b.compare(&a).unwrap(), ab.reverse());
        let bc = b.compare(&c).unwrap();
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert_ne!(a.compare(&c).unwrap(), Ordering::Greater);
        }
        prop_assert_eq!(ab == Ordering::Equal, a == b);
    }

    #[test]
    fn order_is_compatible_with_the_operations(a in exact(), b in exact(), c in exact(), p in nonzero_exact()) {
        let p = p.abs().unwrap();
        let ab = a.compare(&b).unwrap();
        prop_assert_eq!((&a + &c).compare(&(&b + &c)).unwrap(), ab);
        prop_assert_eq!((&a * &p).compare(&(&b * &p)).unwrap(), ab);
    }

    #[test]
    fn standard_part_is_a_ring_morphism(a in finite(), b in finite()) {
        let sa = a.standard_part().unwrap();
        let sb = b.standard_part().unwrap();
        prop_assert_eq!((&a + &b).standard_part().unwrap(), &sa + &sb);
        prop_assert_eq!((&a * &b).standard_part().unwrap(), &sa * &sb);
    }

    #[test]
    fn kernel_is_the_infinitesimals(a in finite()) {
        let st_zero = a.standard_part().unwrap() == CoefficientInterval::zero();
        let class = a.classify_magnitude();
        prop_assert_eq!(st_zero, class == MagnitudeClass::Infinitesimal || a.is_exact_zero());
    }

    #[test]
    fn halo_is_translation_by_infinitesimals(a in finite(), d in infinitesimal()) {
        prop_assert!(a.halo_equal(&(&a + &d)).is_true());
        prop_assert_eq!((&a + &d).standard_part().unwrap(), a.standard_part().unwrap());
    }

    #[test]
    fn approximation_stays_within_eps(y in exact(), k in 1i64..=4) {
        let eps = LeviCivita::t_pow(int(k));
        let q = y.approximate_within(&eps).unwrap();
        prop_assert!(q.is_exact());
        prop_assert_eq!((&y - &q).abs().unwrap().compare(&eps).unwrap(), Ordering::Less);
    }

    #[test]
    fn literal_round_trip(a in exact()) {
        let printed = a.to_string();
        prop_assert_eq!(printed.parse::<LeviCivita>().unwrap(), a);
    }

    #[test]
    fn sqrt_squares_back(a in nonzero_exact()) {
        let sq = &a * &a;
        let order = int(4);
        let root = sq.sqrt(&order, 64).unwrap();
        let back = &root * &root;
        let diff = &back - &sq;
        let lead = sq.order_bound().unwrap();
        // Accurate up to the requested relative order.
        prop_assert!(diff.leading().map_or(true, |t| t.exponent >= &lead + &order || t.coeff.contains_zero()));
        let err = &root - &a.abs().unwrap();
        prop_assert!(err.terms().iter().all(|t| t.coeff.contains_zero()), "{err}");
    }
}
