//! Desk-scale verification of the global product formula over `P^1 / F_q`:
//! closed-point counting, exhaustive enumeration of c-valued divisors by
//! degree, the normalization route through symmetric powers, and the
//! degree-collapsed Euler product. The three computations of each
//! coefficient are independent and must agree exactly.

use crate::error::{ArcError, Result};
use crate::lattice::LatticePoint;
use crate::laurent::Laurent;
use crate::toric::{GradedSeries, SaturatedMonoid};
use num::{BigInt, Integer, One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Closed-point counts of a curve over `F_q`, indexed by residue degree.
///
/// Only `P^1` is built in; other curves are supported by injecting their
/// count table (zeta data is input, not code).
#[derive(Clone, Debug)]
pub struct CurveData {
    pub q: BigInt,
    counts: BTreeMap<u64, BigInt>,
}

impl CurveData {
    /// `P^1 / F_q` with counts cached for degrees `1..=max_degree`.
    pub fn p1(q: u64, max_degree: u64) -> Self {
        let q = BigInt::from(q);
        let counts = (1..=max_degree)
            .map(|d| (d, closed_points(&q, d)))
            .collect();
        CurveData { q, counts }
    }

    /// A curve described by an explicit closed-point count table.
    pub fn from_counts(q: u64, counts: BTreeMap<u64, BigInt>) -> Self {
        CurveData {
            q: BigInt::from(q),
            counts,
        }
    }

    /// `a_d`, the number of closed points of residue degree `d`.
    pub fn point_count(&self, d: u64) -> BigInt {
        self.counts.get(&d).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Number of effective divisors of degree `n`, extracted from the zeta
    /// product `prod_d (1 - u^d)^{-a_d}`.
    pub fn effective_divisors(&self, n: u64) -> BigInt {
        let n = n as usize;
        let mut series = vec![BigInt::zero(); n + 1];
        series[0] = BigInt::one();
        for (&d, a_d) in &self.counts {
            let d = d as usize;
            if d > n || a_d.is_zero() {
                continue;
            }
            let mut next = vec![BigInt::zero(); n + 1];
            for (i, c) in series.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut k = 0usize;
                while i + k * d <= n {
                    next[i + k * d] += c * multichoose(a_d, k as u64);
                    k += 1;
                }
            }
            series = next;
        }
        series[n].clone()
    }
}

/// Closed points of degree `d` on `P^1 / F_q`: the necklace count
/// `(1/d) sum_{e|d} mobius(e) q^{d/e}` of monic irreducibles, plus the
/// point at infinity in degree 1.
pub fn closed_points(q: &BigInt, d: u64) -> BigInt {
    assert!(d >= 1);
    let mut total = BigInt::zero();
    for e in 1..=d {
        if d % e != 0 {
            continue;
        }
        let mu = mobius(e);
        if mu == 0 {
            continue;
        }
        total += BigInt::from(mu) * num::pow::pow(q.clone(), (d / e) as usize);
    }
    let (quot, rem) = total.div_rem(&BigInt::from(d));
    debug_assert!(rem.is_zero());
    if d == 1 {
        quot + BigInt::one()
    } else {
        quot
    }
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut m = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

/// Effective divisors of degree `n` on `P^1 / F_q`: `(q^{n+1} - 1)/(q - 1)`.
pub fn sym_power_count(q: &BigInt, n: u64) -> BigInt {
    let num = num::pow::pow(q.clone(), (n + 1) as usize) - BigInt::one();
    let den = q - BigInt::one();
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

/// Binomial coefficient `C(n, k)` for a big-integer `n`.
fn binomial(n: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - BigInt::from(i);
        let (quot, rem) = acc.div_rem(&BigInt::from(i + 1));
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    acc
}

/// Multichoose `C(n + k - 1, k)`.
fn multichoose(n: &BigInt, k: u64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    binomial(&(n + BigInt::from(k - 1)), k)
}

/// `sum_D a_D` over isomorphism classes of c-valued divisors of total
/// degree `lambda`, with `a_D = prod_x m(lambda_x)`, enumerated
/// exhaustively. Places of equal residue degree are interchangeable, so a
/// divisor is a choice of distinct places per (degree, value) block.
pub fn divisor_sum_direct(
    m: &SaturatedMonoid,
    curve: &CurveData,
    lambda: &LatticePoint,
) -> Result<BigInt> {
    if !m.contains(lambda) {
        return Err(ArcError::OutsideCone);
    }
    let total_grading = m.grading_of(lambda);
    let max_d = u64::try_from(&total_grading).map_err(|_| {
        ArcError::Unsupported("grading of lambda exceeds enumeration range".into())
    })?;

    // Blocks (d, v): residue degree d, value v, contributing degree d*v.
    struct Block {
        degree: u64,
        step: LatticePoint,
        weight: BigInt, // m(v)
    }
    let mut blocks = Vec::new();
    for d in 1..=max_d {
        let value_bound = &total_grading / BigInt::from(d);
        for v in m.cone.enumerate_up_to(&m.grading, &value_bound) {
            if v.is_zero() {
                continue;
            }
            blocks.push(Block {
                degree: d,
                step: v.scale(&BigInt::from(d)),
                weight: m.decomposition_count(&v)?,
            });
        }
    }

    fn rec(
        m: &SaturatedMonoid,
        curve: &CurveData,
        blocks: &[Block],
        idx: usize,
        remaining: &LatticePoint,
        used: &mut HashMap<u64, u64>,
        weight: &BigInt,
        total: &mut BigInt,
    ) {
        if remaining.is_zero() {
            // Remaining blocks all take zero places.
            *total += weight;
            return;
        }
        if idx >= blocks.len() {
            return;
        }
        let block = &blocks[idx];
        let available = curve.point_count(block.degree)
            - BigInt::from(*used.get(&block.degree).unwrap_or(&0));
        let mut k = 0u64;
        let mut rest = remaining.clone();
        loop {
            if BigInt::from(k) <= available {
                let w = weight * binomial(&available, k) * num::pow::pow(block.weight.clone(), k as usize);
                *used.entry(block.degree).or_insert(0) += k;
                rec(m, curve, blocks, idx + 1, &rest, used, &w, total);
                *used.entry(block.degree).or_insert(0) -= k;
            } else {
                break;
            }
            rest = rest.sub(&block.step);
            if !m.contains(&rest) {
                break;
            }
            k += 1;
        }
    }

    let mut total = BigInt::zero();
    rec(
        m,
        curve,
        &blocks,
        0,
        lambda,
        &mut HashMap::new(),
        &BigInt::one(),
        &mut total,
    );
    Ok(total)
}

/// The same number computed through the normalization: a sum over primitive
/// multisets of degree `lambda` of products of symmetric-power point
/// counts.
pub fn divisor_sum_via_normalization(
    m: &SaturatedMonoid,
    curve: &CurveData,
    lambda: &LatticePoint,
) -> Result<BigInt> {
    if !m.contains(lambda) {
        return Err(ArcError::OutsideCone);
    }
    let mut total = BigInt::zero();
    for mu in crate::strata::enumerate_multisets(m, lambda)? {
        if !crate::strata::is_primitive_multiset(m, &mu) {
            continue;
        }
        let mut prod = BigInt::one();
        for &mult in mu.counts.values() {
            prod *= curve.effective_divisors(mult);
        }
        total += prod;
    }
    Ok(total)
}

/// Truncation of the degree-collapsed Euler product
/// `prod_{d >= 1} prod_{nu in Prim(c)} (1 - e^{d nu})^{-a_d}`.
pub fn global_euler_product(
    m: &SaturatedMonoid,
    curve: &CurveData,
    bound: &BigInt,
) -> GradedSeries {
    let points = m.cone.enumerate_up_to(&m.grading, bound);
    let index: HashMap<&LatticePoint, usize> =
        points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut coeffs = vec![BigInt::zero(); points.len()];
    if !points.is_empty() {
        coeffs[0] = BigInt::one();
    }
    let max_d = u64::try_from(bound).unwrap_or(0);
    for d in 1..=max_d {
        let a_d = curve.point_count(d);
        if a_d.is_zero() {
            continue;
        }
        for nu in &m.hilbert_basis {
            let step = nu.scale(&BigInt::from(d));
            let step_grading = m.grading_of(&step);
            if step_grading > *bound {
                continue;
            }
            // Convolve with (1 - e^{step})^{-a_d}.
            let mut next = vec![BigInt::zero(); points.len()];
            for (i, p) in points.iter().enumerate() {
                let mut k = 0u64;
                let mut shifted = p.clone();
                loop {
                    if let Some(&j) = index.get(&shifted) {
                        if !coeffs[j].is_zero() {
                            next[i] += &coeffs[j] * multichoose(&a_d, k);
                        }
                    }
                    shifted = shifted.sub(&step);
                    if !m.contains(&shifted) {
                        break;
                    }
                    k += 1;
                }
            }
            coeffs = next;
        }
    }
    let terms = points
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p, Laurent::constant(c)))
        .collect();
    GradedSeries {
        grading: m.grading.clone(),
        bound: bound.clone(),
        terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::cone_from_generators;

    fn pt(coords: &[i64]) -> LatticePoint {
        LatticePoint::from_i64s(coords)
    }

    fn monoid(rank: usize, gens: &[&[i64]]) -> SaturatedMonoid {
        let gens: Vec<LatticePoint> = gens.iter().map(|g| pt(g)).collect();
        SaturatedMonoid::new(cone_from_generators(rank, &gens).unwrap()).unwrap()
    }

    #[test]
    fn closed_point_counts() {
        let q2 = BigInt::from(2);
        let q3 = BigInt::from(3);
        assert_eq!(closed_points(&q2, 1), BigInt::from(3));
        assert_eq!(closed_points(&q2, 2), BigInt::from(1));
        assert_eq!(closed_points(&q3, 3), BigInt::from(8));
    }

    #[test]
    fn sym_power_counts() {
        let q2 = BigInt::from(2);
        let q3 = BigInt::from(3);
        assert_eq!(sym_power_count(&q2, 0), BigInt::one());
        assert_eq!(sym_power_count(&q2, 2), BigInt::from(7));
        assert_eq!(sym_power_count(&q3, 1), BigInt::from(4));
    }

    #[test]
    fn zeta_sanity() {
        for q in [2u64, 3, 4] {
            let curve = CurveData::p1(q, 12);
            for n in 0..=12u64 {
                assert_eq!(
                    curve.effective_divisors(n),
                    sym_power_count(&BigInt::from(q), n),
                    "q={} n={}",
                    q,
                    n
                );
            }
        }
    }

    #[test]
    fn direct_sum_on_half_line() {
        let m = monoid(1, &[&[1]]);
        let curve = CurveData::p1(2, 8);
        assert_eq!(divisor_sum_direct(&m, &curve, &pt(&[0])).unwrap(), BigInt::one());
        assert_eq!(divisor_sum_direct(&m, &curve, &pt(&[1])).unwrap(), BigInt::from(3));
        assert_eq!(divisor_sum_direct(&m, &curve, &pt(&[2])).unwrap(), BigInt::from(7));
    }

    #[test]
    fn normalization_sum_on_skew_cone() {
        let m = monoid(2, &[&[1, 0], &[1, 2]]);
        let curve = CurveData::p1(2, 8);
        // Primitive lambda: one simple multiset, q + 1 points.
        assert_eq!(
            divisor_sum_via_normalization(&m, &curve, &pt(&[1, 1])).unwrap(),
            BigInt::from(3)
        );
        // (2,2): (q+1)^2 + sym_power_count(q, 2) = 9 + 7.
        assert_eq!(
            divisor_sum_via_normalization(&m, &curve, &pt(&[2, 2])).unwrap(),
            BigInt::from(16)
        );
        assert_eq!(
            divisor_sum_direct(&m, &curve, &pt(&[2, 2])).unwrap(),
            BigInt::from(16)
        );
    }

    #[test]
    fn euler_product_matches_both_sums() {
        let m = monoid(2, &[&[1, 0], &[1, 2]]);
        let curve = CurveData::p1(2, 8);
        let bound = BigInt::from(6);
        let series = global_euler_product(&m, &curve, &bound);
        assert_eq!(series.coefficient(&pt(&[0, 0])), Laurent::from_i64(1));
        assert_eq!(series.coefficient(&pt(&[2, 2])), Laurent::from_i64(16));
        for (lambda, coeff) in series.sorted_terms() {
            let direct = divisor_sum_direct(&m, &curve, lambda).unwrap();
            let via_norm = divisor_sum_via_normalization(&m, &curve, lambda).unwrap();
            assert_eq!(coeff, &Laurent::constant(direct.clone()));
            assert_eq!(direct, via_norm, "mismatch at {:?}", lambda);
        }
    }

    #[test]
    fn euler_product_on_half_line_is_zeta() {
        for q in [2u64, 3] {
            let m = monoid(1, &[&[1]]);
            let curve = CurveData::p1(q, 10);
            let series = global_euler_product(&m, &curve, &BigInt::from(10));
            for n in 0..=10i64 {
                assert_eq!(
                    series.coefficient(&pt(&[n])),
                    Laurent::constant(sym_power_count(&BigInt::from(q), n as u64))
                );
            }
        }
    }

    #[test]
    fn single_point_curve_collapses_to_local_series() {
        // a_1 = 1, a_d = 0 for d > 1: the global product degenerates to the
        // local toric series.
        let m = monoid(2, &[&[1, 0], &[1, 2]]);
        let mut counts = BTreeMap::new();
        counts.insert(1, BigInt::one());
        let curve = CurveData::from_counts(2, counts);
        let bound = BigInt::from(8);
        let global = global_euler_product(&m, &curve, &bound);
        let local = m.toric_ic_series(&bound);
        assert_eq!(global, local);
    }
}
