//! Cross-module consistency drivers: the eight acceptance checks run by the
//! `acceptance` test target and by `arc-ic check-all`.

use crate::global_curve::{divisor_sum_direct, divisor_sum_via_normalization, global_euler_product, CurveData};
use crate::lattice::{cone_from_generators, LatticePoint};
use crate::satake::{
    self, dominates, kostka_foulkes, partitions_of, satake_roundtrip_check, schur, ssyt_count,
    sym_power_character, Convention,
};
use crate::strata::{
    closure_poset, enumerate_multisets, is_primitive_multiset, jacobian_rank_at_diagonal,
    CMultiset,
};
use crate::toric::SaturatedMonoid;
use num::{BigInt, One, Zero};

pub struct CriterionResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn monoid(rank: usize, gens: &[&[i64]]) -> SaturatedMonoid {
    let gens: Vec<LatticePoint> = gens.iter().map(|g| LatticePoint::from_i64s(g)).collect();
    SaturatedMonoid::new(cone_from_generators(rank, &gens).unwrap()).unwrap()
}

/// The fixed test corpus: a free line, the free plane, two singular planar
/// cones, and the plane again but presented through a non-saturated
/// generating set.
pub fn corpus() -> Vec<(&'static str, SaturatedMonoid)> {
    vec![
        ("line", monoid(1, &[&[1]])),
        ("plane", monoid(2, &[&[1, 0], &[0, 1]])),
        ("skew", monoid(2, &[&[1, 0], &[1, 2]])),
        ("wedge", monoid(2, &[&[1, 1], &[1, -1]])),
        (
            "cusp-saturation",
            monoid(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]),
        ),
    ]
}

/// Criterion 1: the counting function, a brute-force oracle, and the
/// product-series coefficient agree on the whole corpus up to grading 12.
pub fn product_formula() -> CriterionResult {
    let bound = BigInt::from(12);
    let mut checks = 0u64;
    for (name, m) in corpus() {
        let series = m.toric_ic_series(&bound);
        for lambda in m.cone.enumerate_up_to(&m.grading, &bound) {
            let dp = m.decomposition_count(&lambda).unwrap();
            let oracle = m.decomposition_count_oracle(&lambda).unwrap();
            let coeff = series.coefficient(&lambda);
            if dp != oracle || coeff.coeff(0) != dp || !coeff.is_constant() {
                return CriterionResult {
                    name: "product-formula",
                    passed: false,
                    detail: format!("{name}: mismatch at {lambda:?}"),
                };
            }
            checks += 1;
        }
    }
    CriterionResult {
        name: "product-formula",
        passed: true,
        detail: format!("{checks} three-way equalities"),
    }
}

/// Criterion 2: free monoids take the value 1 everywhere.
pub fn smooth_normalization() -> CriterionResult {
    let bound = BigInt::from(12);
    for rank in 1..=3usize {
        let gens: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| (i == j) as i64).collect())
            .collect();
        let refs: Vec<&[i64]> = gens.iter().map(|g| g.as_slice()).collect();
        let m = monoid(rank, &refs);
        for lambda in m.cone.enumerate_up_to(&m.grading, &bound) {
            if !m.decomposition_count(&lambda).unwrap().is_one() {
                return CriterionResult {
                    name: "smooth-normalization",
                    passed: false,
                    detail: format!("rank {rank}: value != 1 at {lambda:?}"),
                };
            }
        }
    }
    CriterionResult {
        name: "smooth-normalization",
        passed: true,
        detail: "free monoids of rank 1..3 constant 1 up to grading 12".into(),
    }
}

/// Criterion 3: over the projective line, the direct divisor count, the
/// normalization-side count, and the Euler-product coefficient agree.
pub fn global_local_identity() -> CriterionResult {
    let bound = BigInt::from(8);
    let mut checks = 0u64;
    for q in [2u64, 3, 4] {
        let curve = CurveData::p1(q, 8);
        for (name, m) in corpus() {
            let product = global_euler_product(&m, &curve, &bound);
            for lambda in m.cone.enumerate_up_to(&m.grading, &bound) {
                let direct = divisor_sum_direct(&m, &curve, &lambda).unwrap();
                let via = divisor_sum_via_normalization(&m, &curve, &lambda).unwrap();
                let coeff = product.coefficient(&lambda).coeff(0);
                if direct != via || direct != coeff {
                    return CriterionResult {
                        name: "global-local",
                        passed: false,
                        detail: format!(
                            "{name}, q={q}, {lambda:?}: {direct} / {via} / {coeff}"
                        ),
                    };
                }
                checks += 1;
            }
        }
    }
    CriterionResult {
        name: "global-local",
        passed: true,
        detail: format!("{checks} three-way equalities over q in {{2,3,4}}"),
    }
}

/// Criterion 4: the refinement poset of each degree fiber has the one-part
/// multiset as unique minimum, its maxima are exactly the primitive
/// multisets, and the number of primitive multisets equals the counting
/// function.
pub fn stratification_combinatorics() -> CriterionResult {
    let poset_bound = BigInt::from(6);
    let count_bound = BigInt::from(10);
    for (name, m) in corpus() {
        for lambda in m.cone.enumerate_up_to(&m.grading, &count_bound) {
            if lambda.is_zero() {
                continue;
            }
            let fiber = enumerate_multisets(&m, &lambda).unwrap();
            let primitive: Vec<&CMultiset> = fiber
                .iter()
                .filter(|mu| is_primitive_multiset(&m, mu))
                .collect();
            let m_lambda = m.decomposition_count(&lambda).unwrap();
            if BigInt::from(primitive.len()) != m_lambda {
                return CriterionResult {
                    name: "stratification",
                    passed: false,
                    detail: format!("{name}, {lambda:?}: primitive count != m_lambda"),
                };
            }
            if m.grading_of(&lambda) > poset_bound {
                continue;
            }
            let poset = closure_poset(&m, &lambda).unwrap();
            let min = match poset.minimum() {
                Some(i) => i,
                None => {
                    return CriterionResult {
                        name: "stratification",
                        passed: false,
                        detail: format!("{name}, {lambda:?}: no unique minimum"),
                    }
                }
            };
            if poset.multisets[min] != CMultiset::single(lambda.clone()) {
                return CriterionResult {
                    name: "stratification",
                    passed: false,
                    detail: format!("{name}, {lambda:?}: minimum is not the one-part multiset"),
                };
            }
            let maxima: Vec<&CMultiset> =
                poset.maxima().into_iter().map(|i| &poset.multisets[i]).collect();
            let mut max_set: Vec<&CMultiset> = maxima;
            let mut prim_set: Vec<&CMultiset> = primitive;
            max_set.sort();
            prim_set.sort();
            if max_set != prim_set {
                return CriterionResult {
                    name: "stratification",
                    passed: false,
                    detail: format!("{name}, {lambda:?}: maxima differ from primitive multisets"),
                };
            }
        }
    }
    CriterionResult {
        name: "stratification",
        passed: true,
        detail: "poset minima/maxima up to grading 6, primitive counts up to grading 10".into(),
    }
}

/// Criterion 5: the cuspidal presentation of the plane has a degenerate
/// differential at the diagonal multiset — Jacobian rank 2 out of 4.
pub fn degenerate_differential() -> CriterionResult {
    let parts = [
        LatticePoint::from_i64s(&[3, 0]),
        LatticePoint::from_i64s(&[2, 1]),
        LatticePoint::from_i64s(&[1, 2]),
        LatticePoint::from_i64s(&[0, 3]),
    ];
    let m = monoid(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]);
    let rank = jacobian_rank_at_diagonal(&m, &parts, 2).unwrap();
    CriterionResult {
        name: "degenerate-differential",
        passed: rank == 2,
        detail: format!("rank {rank} (expected 2 < 4)"),
    }
}

/// Criterion 6: the basic function of `Mat_N` is identically 1 on every
/// nonnegative dominant weight, as an exact v-Laurent identity.
pub fn matrix_monoid_identity() -> CriterionResult {
    let mut checks = 0u64;
    for n_gl in 2..=3usize {
        for n in 0..=8u64 {
            for mu in partitions_of(n, n_gl) {
                let mut w: Vec<i64> = mu.iter().map(|&x| x as i64).collect();
                w.resize(n_gl, 0);
                let ic = satake::ic_lmonoid_value(n_gl, &[1], &w, Convention::Plus).unwrap();
                if !ic.is_one() {
                    return CriterionResult {
                        name: "matrix-monoid-identity",
                        passed: false,
                        detail: format!("N={n_gl}, mu={w:?}: {ic:?}"),
                    };
                }
                checks += 1;
            }
        }
    }
    CriterionResult {
        name: "matrix-monoid-identity",
        passed: true,
        detail: format!("{checks} weights, N in {{2,3}}, |mu| <= 8"),
    }
}

/// Criterion 7: charge/Kostka properties, Hall-Littlewood round-trips, and
/// the symmetric-power dimension series.
pub fn transform_machinery() -> CriterionResult {
    // Kostka positivity and specializations, |lambda| <= 6.
    for n in 1..=6u64 {
        for lambda in partitions_of(n, n as usize) {
            for mu in partitions_of(n, n as usize) {
                let k = kostka_foulkes(&lambda, &mu).unwrap();
                let ok = k.terms().all(|(e, c)| *e >= 0 && c > &BigInt::zero())
                    && k.eval_one() == BigInt::from(ssyt_count(&lambda, &mu))
                    && (k.coeff(0) == BigInt::one()) == (lambda == mu)
                    && (dominates(&lambda, &mu) || k.is_zero());
                if !ok {
                    return CriterionResult {
                        name: "transform-machinery",
                        passed: false,
                        detail: format!("Kostka failure at {lambda:?}, {mu:?}"),
                    };
                }
            }
        }
    }
    // Round-trip at a generic parameter, N <= 3, degree <= 8.
    for nvars in 1..=3usize {
        if !satake_roundtrip_check(nvars, 8).unwrap() {
            return CriterionResult {
                name: "transform-machinery",
                passed: false,
                detail: format!("round-trip failure with {nvars} variables"),
            };
        }
    }
    // Dimension series of Sym^n matches (1-y)^{-dim} to order 8.
    let choose = |d: u64, n: u64| -> BigInt {
        let mut acc = BigInt::one();
        for i in 0..n {
            acc = acc * BigInt::from(d + i) / BigInt::from(i + 1);
        }
        acc
    };
    for (nvars, lambda) in [(2usize, vec![1u64]), (3, vec![1]), (2, vec![2]), (3, vec![1, 1])] {
        let dim = schur(nvars, &lambda).unwrap().eval_ones().coeff(0);
        let d = u64::try_from(&dim).unwrap();
        for n in 0..=8u64 {
            let got = sym_power_character(nvars, &lambda, n).unwrap().eval_ones();
            if got.coeff(0) != choose(d, n) || !got.is_constant() {
                return CriterionResult {
                    name: "transform-machinery",
                    passed: false,
                    detail: format!("dimension series failure, lambda={lambda:?}, n={n}"),
                };
            }
        }
    }
    CriterionResult {
        name: "transform-machinery",
        passed: true,
        detail: "Kostka, round-trip, and dimension-series checks".into(),
    }
}

/// Criterion 8: every toric coefficient is a bare integer — no v-dependence.
pub fn field_independence() -> CriterionResult {
    let bound = BigInt::from(12);
    for (name, m) in corpus() {
        let series = m.toric_ic_series(&bound);
        for (lambda, coeff) in &series.terms {
            if !coeff.is_constant() {
                return CriterionResult {
                    name: "field-independence",
                    passed: false,
                    detail: format!("{name}: v-dependent coefficient at {lambda:?}"),
                };
            }
        }
    }
    CriterionResult {
        name: "field-independence",
        passed: true,
        detail: "all corpus coefficients constant in v".into(),
    }
}

/// Run all eight checks in order.
pub fn acceptance_suite() -> Vec<CriterionResult> {
    vec![
        product_formula(),
        smooth_normalization(),
        global_local_identity(),
        stratification_combinatorics(),
        degenerate_differential(),
        matrix_monoid_identity(),
        transform_machinery(),
        field_independence(),
    ]
}
