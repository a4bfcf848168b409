//! The basic function on the arc space of an affine normal toric variety.
//!
//! The value of the IC function on the orbit through `t^lambda` is the
//! number `m_lambda` of multisets of primitive monoid elements summing to
//! `lambda`. Three routes to that number live here: a dynamic program over
//! the Hilbert basis, a memo-free exhaustive oracle, and the coefficient of
//! the truncated product `prod_{nu in Prim(c)} (1 - e^nu)^{-1}`.

use crate::error::{ArcError, Result};
use crate::lattice::{sort_graded, DualVector, LatticePoint, RationalCone};
use crate::laurent::Laurent;
use num::{BigInt, One, Zero};
use std::collections::{BTreeMap, HashMap, HashSet};

/// A strictly convex saturated monoid of lattice points, with its Hilbert
/// basis and a positive grading functional computed eagerly at construction.
#[derive(Clone, Debug)]
pub struct SaturatedMonoid {
    pub cone: RationalCone,
    pub hilbert_basis: Vec<LatticePoint>,
    pub grading: DualVector,
    /// True when the lattice points of the cone strictly contain the monoid
    /// generated by the input generators, i.e. saturation enlarged the input.
    pub enlarged_by_saturation: bool,
}

impl SaturatedMonoid {
    pub fn new(cone: RationalCone) -> Result<Self> {
        let grading = cone.grading_functional()?;
        let hilbert_basis = hilbert_basis(&cone, &grading)?;
        let enlarged_by_saturation = hilbert_basis
            .iter()
            .any(|h| !is_nonneg_combination(h, &cone.generators, &cone));
        Ok(SaturatedMonoid {
            cone,
            hilbert_basis,
            grading,
            enlarged_by_saturation,
        })
    }

    pub fn rank(&self) -> usize {
        self.cone.rank
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.cone.contains(p)
    }

    pub fn grading_of(&self, p: &LatticePoint) -> BigInt {
        self.grading.dot(p)
    }

    /// The number of multisets of Hilbert-basis elements summing to
    /// `lambda`, by dynamic programming in the deterministic basis order
    /// (counting representations with nondecreasing generator index).
    pub fn decomposition_count(&self, lambda: &LatticePoint) -> Result<BigInt> {
        if !self.contains(lambda) {
            return Err(ArcError::OutsideCone);
        }
        let mut memo: HashMap<(LatticePoint, usize), BigInt> = HashMap::new();
        Ok(self.count_from(lambda, 0, &mut memo))
    }

    fn count_from(
        &self,
        target: &LatticePoint,
        idx: usize,
        memo: &mut HashMap<(LatticePoint, usize), BigInt>,
    ) -> BigInt {
        if target.is_zero() {
            return BigInt::one();
        }
        if idx >= self.hilbert_basis.len() {
            return BigInt::zero();
        }
        let key = (target.clone(), idx);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = self.count_from(target, idx + 1, memo);
        let reduced = target.sub(&self.hilbert_basis[idx]);
        if self.contains(&reduced) {
            total += self.count_from(&reduced, idx, memo);
        }
        memo.insert(key, total.clone());
        total
    }

    /// Same value as [`decomposition_count`], by exhaustive enumeration of
    /// nondecreasing-index generator sequences with no memoization. Kept as
    /// a structurally independent verification path.
    ///
    /// [`decomposition_count`]: SaturatedMonoid::decomposition_count
    pub fn decomposition_count_oracle(&self, lambda: &LatticePoint) -> Result<BigInt> {
        if !self.contains(lambda) {
            return Err(ArcError::OutsideCone);
        }
        fn walk(m: &SaturatedMonoid, target: &LatticePoint, min_idx: usize) -> BigInt {
            if target.is_zero() {
                return BigInt::one();
            }
            let mut total = BigInt::zero();
            for i in min_idx..m.hilbert_basis.len() {
                let next = target.sub(&m.hilbert_basis[i]);
                if m.contains(&next) {
                    total += walk(m, &next, i);
                }
            }
            total
        }
        Ok(walk(self, lambda, 0))
    }

    /// Truncation to grading `<= bound` of
    /// `prod_{nu in Prim(c)} (1 - e^nu)^{-1}`.
    pub fn toric_ic_series(&self, bound: &BigInt) -> GradedSeries {
        let points = self.cone.enumerate_up_to(&self.grading, bound);
        let index: HashMap<&LatticePoint, usize> =
            points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut coeffs = vec![BigInt::zero(); points.len()];
        if !points.is_empty() {
            coeffs[0] = BigInt::one(); // points[0] is the origin
        }
        for nu in &self.hilbert_basis {
            // Multiply by the geometric series (1 - e^nu)^{-1}: a single
            // pass in increasing grading order, since grading(nu) >= 1.
            for i in 0..points.len() {
                let prev = points[i].sub(nu);
                if let Some(&j) = index.get(&prev) {
                    let add = coeffs[j].clone();
                    coeffs[i] += add;
                }
            }
        }
        let terms = points
            .into_iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p, Laurent::constant(c)))
            .collect();
        GradedSeries {
            grading: self.grading.clone(),
            bound: bound.clone(),
            terms,
        }
    }

    /// The value `m_lambda` of the IC function on the orbit through
    /// `t^lambda`, as a (v-constant) Laurent coefficient.
    pub fn ic_arc_value(&self, lambda: &LatticePoint) -> Result<Laurent> {
        Ok(Laurent::constant(self.decomposition_count(lambda)?))
    }
}

/// The primitive elements `Prim(c)` of the monoid of lattice points of a
/// strictly convex cone, in the deterministic (grading, lex) order.
///
/// Enumerates cone points up to the sum of the generator gradings (every
/// irreducible element lies strictly below that bound) and filters by the
/// no-nontrivial-splitting test; completeness of the result is asserted by
/// checking that the basis generates every enumerated point.
pub fn hilbert_basis(cone: &RationalCone, grading: &DualVector) -> Result<Vec<LatticePoint>> {
    if !cone.is_strictly_convex() {
        return Err(ArcError::NotStrictlyConvex);
    }
    let bound: BigInt = cone
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| grading.dot(g))
        .sum();
    let points = cone.enumerate_up_to(grading, &bound);
    let mut basis: Vec<LatticePoint> = Vec::new();
    for p in &points {
        if p.is_zero() {
            continue;
        }
        let splittable = points.iter().any(|q| {
            if q.is_zero() || q == p {
                return false;
            }
            let rest = p.sub(q);
            !rest.is_zero() && cone.contains(&rest)
        });
        if !splittable {
            basis.push(p.clone());
        }
    }
    // Generation check: every enumerated point must be an N-combination of
    // the basis, which proves completeness at this bound.
    let mut reachable: HashSet<LatticePoint> = HashSet::new();
    let mut sorted = points.clone();
    sort_graded(&mut sorted, grading);
    for p in &sorted {
        if p.is_zero()
            || basis.iter().any(|b| {
                let rest = p.sub(b);
                cone.contains(&rest) && (rest.is_zero() || reachable.contains(&rest))
            })
        {
            reachable.insert(p.clone());
        }
    }
    for p in &points {
        if !p.is_zero() && !reachable.contains(p) {
            return Err(ArcError::Unsupported(
                "computed Hilbert basis fails to generate an enumerated point".into(),
            ));
        }
    }
    Ok(basis)
}

/// Is `p` a nonnegative integer combination of `gens`?
fn is_nonneg_combination(p: &LatticePoint, gens: &[LatticePoint], cone: &RationalCone) -> bool {
    fn walk(
        target: &LatticePoint,
        gens: &[LatticePoint],
        min_idx: usize,
        cone: &RationalCone,
        memo: &mut HashSet<(LatticePoint, usize)>,
    ) -> bool {
        if target.is_zero() {
            return true;
        }
        let key = (target.clone(), min_idx);
        if memo.contains(&key) {
            return false;
        }
        for i in min_idx..gens.len() {
            if gens[i].is_zero() {
                continue;
            }
            let next = target.sub(&gens[i]);
            if cone.contains(&next) && walk(&next, gens, i, cone, memo) {
                return true;
            }
        }
        memo.insert(key);
        false
    }
    walk(p, gens, 0, cone, &mut HashSet::new())
}

/// A formal series truncated by the grading functional: a finitely
/// supported map from lattice points to v-Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    pub grading: DualVector,
    pub bound: BigInt,
    pub terms: BTreeMap<LatticePoint, Laurent>,
}

impl GradedSeries {
    pub fn coefficient(&self, lambda: &LatticePoint) -> Laurent {
        self.terms.get(lambda).cloned().unwrap_or_else(Laurent::zero)
    }

    /// Terms in the deterministic (grading, lex) order.
    pub fn sorted_terms(&self) -> Vec<(&LatticePoint, &Laurent)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|(a, _), (b, _)| {
            self.grading
                .dot(a)
                .cmp(&self.grading.dot(b))
                .then_with(|| a.cmp(b))
        });
        out
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
    fn hilbert_basis_quadrant() {
        let m = monoid(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(m.hilbert_basis, vec![pt(&[0, 1]), pt(&[1, 0])]);
        assert!(!m.enlarged_by_saturation);
    }

    #[test]
    fn hilbert_basis_skew() {
        let m = monoid(2, &[&[1, 0], &[1, 2]]);
        assert_eq!(m.hilbert_basis, vec![pt(&[1, 0]), pt(&[1, 1]), pt(&[1, 2])]);
        assert!(m.enlarged_by_saturation);
    }

    #[test]
    fn hilbert_basis_of_cusp_presentation() {
        let m = monoid(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]);
        assert_eq!(m.hilbert_basis, vec![pt(&[0, 1]), pt(&[1, 0])]);
        assert!(m.enlarged_by_saturation);
    }

    #[test]
    fn hilbert_basis_requires_strict_convexity() {
        let cone = cone_from_generators(2, &[pt(&[1, 0]), pt(&[-1, 0])]).unwrap();
        assert_eq!(SaturatedMonoid::new(cone).unwrap_err(), ArcError::NotStrictlyConvex);
    }

    #[test]
    fn decomposition_counts() {
        let quadrant = monoid(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(quadrant.decomposition_count(&pt(&[0, 0])).unwrap(), BigInt::one());
        assert_eq!(
            quadrant.decomposition_count(&pt(&[5, 7])).unwrap(),
            BigInt::one()
        );
        let skew = monoid(2, &[&[1, 0], &[1, 2]]);
        // (2,2) = (1,1)+(1,1) = (1,0)+(1,2)
        assert_eq!(
            skew.decomposition_count(&pt(&[2, 2])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            skew.decomposition_count(&pt(&[0, 1])).unwrap_err(),
            ArcError::OutsideCone
        );
    }

    #[test]
    fn oracle_agrees_with_dp() {
        let skew = monoid(2, &[&[1, 0], &[1, 1], &[1, 2]]);
        for x in 0..=4i64 {
            for y in 0..=(2 * x) {
                let p = pt(&[x, y]);
                assert_eq!(
                    skew.decomposition_count(&p).unwrap(),
                    skew.decomposition_count_oracle(&p).unwrap(),
                    "disagreement at {:?}",
                    p
                );
            }
        }
        let quadrant = monoid(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            quadrant.decomposition_count_oracle(&pt(&[3, 1])).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn series_matches_counts() {
        let half_line = monoid(1, &[&[1]]);
        let series = half_line.toric_ic_series(&BigInt::from(4));
        for n in 0..=4i64 {
            assert_eq!(series.coefficient(&pt(&[n])), Laurent::from_i64(1));
        }

        let quadrant = monoid(2, &[&[1, 0], &[0, 1]]);
        let series = quadrant.toric_ic_series(&BigInt::from(3));
        for (_, c) in series.sorted_terms() {
            assert_eq!(*c, Laurent::from_i64(1));
        }

        let skew = monoid(2, &[&[1, 0], &[1, 2]]);
        let series = skew.toric_ic_series(&BigInt::from(4));
        assert_eq!(series.coefficient(&pt(&[2, 2])), Laurent::from_i64(2));
    }

    #[test]
    fn ic_values_on_smooth_monoids() {
        let m = monoid(2, &[&[3, 0], &[0, 3], &[2, 1], &[1, 2]]);
        assert_eq!(m.ic_arc_value(&pt(&[6, 6])).unwrap(), Laurent::from_i64(1));
        assert_eq!(m.ic_arc_value(&pt(&[0, 0])).unwrap(), Laurent::from_i64(1));
    }

    #[test]
    fn primitive_elements_have_unit_value() {
        let skew = monoid(2, &[&[1, 0], &[1, 2]]);
        for nu in &skew.hilbert_basis {
            assert_eq!(skew.decomposition_count(nu).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn multiplicativity_under_direct_sum() {
        // c1 = skew cone in Z^2, c2 = half-line in Z^1; direct sum in Z^3.
        let c1 = monoid(2, &[&[1, 0], &[1, 2]]);
        let c2 = monoid(1, &[&[1]]);
        let sum = monoid(3, &[&[1, 0, 0], &[1, 2, 0], &[0, 0, 1]]);
        for x in 0..=3i64 {
            for y in 0..=(2 * x) {
                for z in 0..=3i64 {
                    let a = c1.decomposition_count(&pt(&[x, y])).unwrap();
                    let b = c2.decomposition_count(&pt(&[z])).unwrap();
                    let ab = sum.decomposition_count(&pt(&[x, y, z])).unwrap();
                    assert_eq!(ab, a * b);
                }
            }
        }
    }

    #[test]
    fn unimodular_invariance() {
        // U = [[1,1],[0,1]] applied to the skew cone's generators.
        let skew = monoid(2, &[&[1, 0], &[1, 2]]);
        let image = monoid(2, &[&[1, 0], &[3, 2]]);
        let apply = |p: &LatticePoint| pt(&[
            i64::try_from(&p.0[0]).unwrap() + i64::try_from(&p.0[1]).unwrap(),
            i64::try_from(&p.0[1]).unwrap(),
        ]);
        for x in 0..=4i64 {
            for y in 0..=(2 * x) {
                let p = pt(&[x, y]);
                assert_eq!(
                    skew.decomposition_count(&p).unwrap(),
                    image.decomposition_count(&apply(&p)).unwrap()
                );
            }
        }
    }
}
