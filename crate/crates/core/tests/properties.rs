//! Randomized properties over small cones and coefficients.

use arc_ic_core::lattice::{cone_from_generators, is_rational_combination};
use arc_ic_core::report::canonicalize_input;
use arc_ic_core::toric::SaturatedMonoid;
use arc_ic_core::{LatticePoint, Laurent};
use num::BigInt;
use proptest::prelude::*;

fn small_gens() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 1..=3)
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::btree_map(-4i64..=4, -9i64..=9, 0..=4).prop_map(|m| {
        let mut p = Laurent::zero();
        for (e, c) in m {
            p.add_term(e, &BigInt::from(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&(&a - &b) + &(&b - &a)).is_zero());
    }

    #[test]
    fn enumerated_points_lie_in_the_cone(gens in small_gens()) {
        let points: Vec<LatticePoint> =
            gens.iter().map(|g| LatticePoint::from_i64s(g)).collect();
        let cone = match cone_from_generators(2, &points) {
            Ok(c) => c,
            Err(_) => return Ok(()), // e.g. all generators zero
        };
        let m = match SaturatedMonoid::new(cone) {
            Ok(m) => m,
            Err(_) => return Ok(()), // not strictly convex
        };
        for p in m.cone.enumerate_up_to(&m.grading, &BigInt::from(6)) {
            prop_assert!(m.contains(&p));
            prop_assert!(is_rational_combination(&points, &p));
        }
    }

    #[test]
    fn counting_function_matches_oracle(gens in small_gens()) {
        let points: Vec<LatticePoint> =
            gens.iter().map(|g| LatticePoint::from_i64s(g)).collect();
        let m = match cone_from_generators(2, &points).and_then(SaturatedMonoid::new) {
            Ok(m) => m,
            Err(_) => return Ok(()),
        };
        for lambda in m.cone.enumerate_up_to(&m.grading, &BigInt::from(5)) {
            prop_assert_eq!(
                m.decomposition_count(&lambda).unwrap(),
                m.decomposition_count_oracle(&lambda).unwrap()
            );
        }
    }

    #[test]
    fn canonicalization_is_idempotent_and_order_blind(gens in small_gens(), seed in any::<u64>()) {
        let input = serde_json::json!({"rank": 2, "generators": gens});
        let canonical = canonicalize_input(&input).unwrap();
        prop_assert_eq!(canonicalize_input(&canonical).unwrap(), canonical.clone());
        // Any permutation of the generator list canonicalizes identically.
        let mut shuffled = gens.clone();
        if !shuffled.is_empty() {
            let k = (seed as usize) % shuffled.len();
            shuffled.rotate_left(k);
        }
        let permuted = serde_json::json!({"rank": 2, "generators": shuffled});
        prop_assert_eq!(canonicalize_input(&permuted).unwrap(), canonical);
    }
}
