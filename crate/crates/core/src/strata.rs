//! Combinatorics of the global model: multisets over the monoid, the
//! refinement partial order controlling stratum closures, component
//! indexing, and normalization fiber counts.

use crate::error::{ArcError, Result};
use crate::lattice::{column_rank, LatticePoint};
use crate::toric::SaturatedMonoid;
use num::{BigInt, One};
use std::collections::{BTreeMap, HashSet, VecDeque};

/// A finitely supported map from nonzero cone points to positive
/// multiplicities; the stratum index of the global model.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct CMultiset {
    pub counts: BTreeMap<LatticePoint, u64>,
}

impl CMultiset {
    pub fn empty() -> Self {
        CMultiset::default()
    }

    pub fn single(lambda: LatticePoint) -> Self {
        let mut counts = BTreeMap::new();
        counts.insert(lambda, 1);
        CMultiset { counts }
    }

    pub fn from_parts(parts: &[LatticePoint]) -> Self {
        let mut counts = BTreeMap::new();
        for p in parts {
            *counts.entry(p.clone()).or_insert(0) += 1;
        }
        CMultiset { counts }
    }

    pub fn insert(&mut self, lambda: LatticePoint, mult: u64) {
        if mult > 0 {
            *self.counts.entry(lambda).or_insert(0) += mult;
        }
    }

    pub fn remove_one(&mut self, lambda: &LatticePoint) {
        if let Some(c) = self.counts.get_mut(lambda) {
            *c -= 1;
            if *c == 0 {
                self.counts.remove(lambda);
            }
        }
    }

    /// Total number of parts, with multiplicity.
    pub fn size(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `deg(mu) = sum mu(lambda) * lambda`.
    pub fn degree(&self, rank: usize) -> LatticePoint {
        let mut d = LatticePoint::zero(rank);
        for (lambda, &c) in &self.counts {
            d = d.add(&lambda.scale(&BigInt::from(c)));
        }
        d
    }

    pub fn validate(&self, m: &SaturatedMonoid) -> Result<()> {
        for lambda in self.counts.keys() {
            if lambda.is_zero() || !m.contains(lambda) {
                return Err(ArcError::Domain(
                    "multiset keys must be nonzero cone points".into(),
                ));
            }
        }
        Ok(())
    }
}

/// True iff the support of `mu` lies in `Prim(c)`; such multisets index the
/// irreducible components of the global model.
pub fn is_primitive_multiset(m: &SaturatedMonoid, mu: &CMultiset) -> bool {
    mu.counts.keys().all(|k| m.hilbert_basis.contains(k))
}

/// All multisets of nonzero cone points of degree `lambda`, deterministically
/// ordered by the enumeration of their parts.
pub fn enumerate_multisets(m: &SaturatedMonoid, lambda: &LatticePoint) -> Result<Vec<CMultiset>> {
    if !m.contains(lambda) {
        return Err(ArcError::OutsideCone);
    }
    let bound = m.grading_of(lambda);
    let candidates: Vec<LatticePoint> = m
        .cone
        .enumerate_up_to(&m.grading, &bound)
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<LatticePoint> = Vec::new();
    fn rec(
        candidates: &[LatticePoint],
        m: &SaturatedMonoid,
        remaining: &LatticePoint,
        min_idx: usize,
        current: &mut Vec<LatticePoint>,
        out: &mut Vec<CMultiset>,
    ) {
        if remaining.is_zero() {
            out.push(CMultiset::from_parts(current));
            return;
        }
        for i in min_idx..candidates.len() {
            let next = remaining.sub(&candidates[i]);
            if m.contains(&next) {
                current.push(candidates[i].clone());
                rec(candidates, m, &next, i, current, out);
                current.pop();
            }
        }
    }
    rec(&candidates, m, lambda, 0, &mut current, &mut out);
    Ok(out)
}

/// All elementary one-step refinements of `mu`: replace one part `lambda`
/// by a pair of nonzero cone points summing to it.
fn elementary_refinements(m: &SaturatedMonoid, mu: &CMultiset) -> Vec<CMultiset> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for lambda in mu.counts.keys() {
        let bound = m.grading_of(lambda);
        for a in m.cone.enumerate_up_to(&m.grading, &bound) {
            if a.is_zero() {
                continue;
            }
            let b = lambda.sub(&a);
            if b.is_zero() || !m.contains(&b) || a > b {
                continue;
            }
            let mut refined = mu.clone();
            refined.remove_one(lambda);
            refined.insert(a.clone(), 1);
            refined.insert(b, 1);
            if seen.insert(refined.clone()) {
                out.push(refined);
            }
        }
    }
    out
}

/// The refinement order: `mu |- mu'` iff `mu` can be reached from `mu'` by a
/// chain of elementary splittings. Decided by breadth-first search; the
/// search space is a finite degree fiber.
pub fn refines(m: &SaturatedMonoid, mu: &CMultiset, mu_prime: &CMultiset) -> bool {
    let rank = m.rank();
    if mu.degree(rank) != mu_prime.degree(rank) {
        return false;
    }
    if mu == mu_prime {
        return true;
    }
    if mu.size() <= mu_prime.size() {
        return false;
    }
    let mut visited: HashSet<CMultiset> = HashSet::new();
    let mut queue = VecDeque::new();
    queue.push_back(mu_prime.clone());
    visited.insert(mu_prime.clone());
    while let Some(cur) = queue.pop_front() {
        for next in elementary_refinements(m, &cur) {
            if next == *mu {
                return true;
            }
            if next.size() < mu.size() && visited.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// The full refinement relation on one degree fiber.
#[derive(Clone, Debug)]
pub struct ClosurePoset {
    pub multisets: Vec<CMultiset>,
    /// `relation[i][j]` is true iff `multisets[i] |- multisets[j]`.
    pub relation: Vec<Vec<bool>>,
}

impl ClosurePoset {
    /// Index of the unique minimum (refined by every element).
    pub fn minimum(&self) -> Option<usize> {
        (0..self.multisets.len())
            .find(|&j| (0..self.multisets.len()).all(|i| self.relation[i][j]))
    }

    /// Indices of maximal elements (refined by nothing else).
    pub fn maxima(&self) -> Vec<usize> {
        (0..self.multisets.len())
            .filter(|&j| (0..self.multisets.len()).all(|i| i == j || !self.relation[i][j]))
            .collect()
    }

    /// Covering relations `(finer, coarser)` of the order.
    pub fn covering_edges(&self) -> Vec<(usize, usize)> {
        let n = self.multisets.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.relation[i][j] {
                    continue;
                }
                let covered = (0..n).any(|k| {
                    k != i && k != j && self.relation[i][k] && self.relation[k][j]
                });
                if !covered {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

/// Compute the refinement order on the fiber of multisets of degree
/// `lambda`, as reachability through elementary splittings.
pub fn closure_poset(m: &SaturatedMonoid, lambda: &LatticePoint) -> Result<ClosurePoset> {
    let multisets = enumerate_multisets(m, lambda)?;
    let index: BTreeMap<&CMultiset, usize> =
        multisets.iter().enumerate().map(|(i, mu)| (mu, i)).collect();
    let n = multisets.len();
    // relation[i][j]: i refines j, i.e. i is reachable from j by splits.
    let mut relation = vec![vec![false; n]; n];
    for j in 0..n {
        let mut stack = vec![j];
        relation[j][j] = true;
        while let Some(cur) = stack.pop() {
            for next in elementary_refinements(m, &multisets[cur]) {
                let &i = index
                    .get(&next)
                    .expect("refinement stays inside the degree fiber");
                if !relation[i][j] {
                    relation[i][j] = true;
                    stack.push(i);
                }
            }
        }
    }
    Ok(ClosurePoset {
        multisets,
        relation,
    })
}

/// An abstract c-valued divisor: places represented by residue degree only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CValuedDivisor {
    pub places: Vec<(u64, LatticePoint)>,
}

/// The number of rational points of the normalization fiber over the point
/// corresponding to the divisor: the product over places of the
/// decomposition count of the value carried there.
pub fn fiber_count(divisor: &CValuedDivisor, m: &SaturatedMonoid) -> Result<BigInt> {
    let mut total = BigInt::one();
    for (_, value) in &divisor.places {
        total *= m.decomposition_count(value)?;
    }
    Ok(total)
}

/// Rank of the differential at the total diagonal origin of the map sending
/// curve points to the power-sum coordinates `Z^j(D) = sum x^j lambda_x`.
/// At the origin only `Z^1` contributes, and its matrix has the parts as
/// columns.
pub fn jacobian_rank_at_diagonal(
    m: &SaturatedMonoid,
    parts: &[LatticePoint],
    num_coords: usize,
) -> Result<usize> {
    for p in parts {
        if p.is_zero() || !m.contains(p) {
            return Err(ArcError::Domain(
                "parts must be nonzero cone points".into(),
            ));
        }
    }
    if num_coords == 0 {
        return Ok(0);
    }
    Ok(column_rank(parts))
}
