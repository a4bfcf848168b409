//! Exact lattice and rational-cone geometry.
//!
//! Everything here is arbitrary-precision integer (or rational) arithmetic:
//! cone construction by Fourier-Motzkin elimination, facet membership tests,
//! strict convexity, grading functionals and bounded enumeration. These
//! primitives underpin every other module of the crate.

use crate::error::{ArcError, Result};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::collections::BTreeSet;

/// An integer vector in the cocharacter lattice `Z^r`.
///
/// The same representation is used for dual vectors (facet normals and
/// grading functionals); the pairing is the standard dot product.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticePoint(pub Vec<BigInt>);

/// A dual vector, paired against lattice points by the dot product.
pub type DualVector = LatticePoint;

impl LatticePoint {
    pub fn zero(rank: usize) -> Self {
        LatticePoint(vec![BigInt::zero(); rank])
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        LatticePoint(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &LatticePoint) -> BigInt {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }

    /// Divide by the gcd of the coordinates (no-op on the zero vector).
    pub fn primitive(&self) -> LatticePoint {
        let g = vec_gcd(&self.0);
        if g.is_zero() || g.is_one() {
            self.clone()
        } else {
            LatticePoint(self.0.iter().map(|a| a / &g).collect())
        }
    }
}

fn vec_gcd(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    g
}

/// A rational polyhedral cone given by generators, with a derived complete
/// facet (inequality) description.
///
/// A point lies in the cone iff it pairs nonnegatively with every facet
/// vector. For cones that are not full-dimensional the facet list contains
/// opposite pairs spanning the orthogonal complement, so the description is
/// always complete. Facet vectors are primitive and sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalCone {
    pub rank: usize,
    pub generators: Vec<LatticePoint>,
    pub facets: Vec<DualVector>,
}

/// Construct the cone generated by `gens` in `Z^rank`.
///
/// The facet description is computed by Fourier-Motzkin elimination of the
/// coefficient variables from `x = sum t_i g_i, t_i >= 0`, followed by a
/// supporting-hyperplane filter that keeps exactly the facets. Idempotent
/// under redundant generators.
pub fn cone_from_generators(rank: usize, gens: &[LatticePoint]) -> Result<RationalCone> {
    if rank == 0 {
        return Err(ArcError::Domain("rank must be >= 1".into()));
    }
    for g in gens {
        if g.rank() != rank {
            return Err(ArcError::DimensionMismatch {
                expected: rank,
                got: g.rank(),
            });
        }
    }
    // Dedup generators, preserving first occurrence.
    let mut generators: Vec<LatticePoint> = Vec::new();
    for g in gens {
        if !generators.contains(g) {
            generators.push(g.clone());
        }
    }
    let gen_rows: Vec<Vec<BigInt>> = generators.iter().map(|g| g.0.clone()).collect();
    let p = int_rank(&gen_rows);
    let kernel = int_kernel_basis(&gen_rows, rank);

    let mut facets: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for k in &kernel {
        let k = LatticePoint(k.clone()).primitive();
        facets.insert(k.0.clone());
        facets.insert(k.neg().0);
    }

    if p > 0 {
        let m = generators.len();
        // Variables: [t_1..t_m | x_1..x_r].
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..rank {
            let mut row = vec![BigInt::zero(); m + rank];
            for (i, g) in generators.iter().enumerate() {
                row[i] = -&g.0[j];
            }
            row[m + j] = BigInt::one();
            rows.push(row.iter().map(|c| -c).collect());
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![BigInt::zero(); m + rank];
            row[i] = BigInt::one();
            rows.push(row);
        }
        let projected = fourier_motzkin(rows, m);
        for row in projected {
            let a = LatticePoint(row);
            if a.is_zero() {
                continue;
            }
            // Project onto the span of the generators; the pairing with each
            // generator is unchanged by dropping the orthogonal component.
            let a_span = match project_onto_rowspace(&a, &kernel) {
                Some(v) => v,
                None => continue, // lies entirely in the orthogonal complement
            };
            let tight: Vec<Vec<BigInt>> = generators
                .iter()
                .filter(|g| a.dot(g).is_zero())
                .map(|g| g.0.clone())
                .collect();
            if int_rank(&tight) == p - 1 {
                facets.insert(a_span.primitive().0);
            }
        }
    }

    let facets = facets.into_iter().map(LatticePoint).collect();
    Ok(RationalCone {
        rank,
        generators,
        facets,
    })
}

impl RationalCone {
    /// Membership test: nonnegative pairing with every facet. By saturation
    /// this is exactly membership in the monoid of lattice points.
    pub fn contains(&self, p: &LatticePoint) -> bool {
        p.rank() == self.rank && self.facets.iter().all(|f| !f.dot(p).is_negative())
    }

    /// True iff the cone contains no line, equivalently the facet normals
    /// span the ambient rational vector space.
    pub fn is_strictly_convex(&self) -> bool {
        let rows: Vec<Vec<BigInt>> = self.facets.iter().map(|f| f.0.clone()).collect();
        int_rank(&rows) == self.rank
    }

    /// A dual integer vector pairing to at least 1 with every nonzero
    /// lattice point of the cone: the sum of the primitive facet normals.
    pub fn grading_functional(&self) -> Result<DualVector> {
        if !self.is_strictly_convex() {
            return Err(ArcError::NotStrictlyConvex);
        }
        let mut g = LatticePoint::zero(self.rank);
        for f in &self.facets {
            g = g.add(f);
        }
        for gen in &self.generators {
            if !gen.is_zero() && g.dot(gen) < BigInt::one() {
                return Err(ArcError::Unsupported(
                    "grading functional fails to be positive on a generator".into(),
                ));
            }
        }
        Ok(g)
    }

    /// All lattice points `v` of the cone with `<g, v> <= bound`, in the
    /// deterministic (grading, lex) order.
    pub fn enumerate_up_to(&self, g: &DualVector, bound: &BigInt) -> Vec<LatticePoint> {
        if bound.is_negative() {
            return Vec::new();
        }
        // Every such point is a convex combination of 0 and the scaled
        // generators bound * g_i / <g, g_i>, which yields coordinate bounds.
        let mut lo = vec![BigRational::zero(); self.rank];
        let mut hi = vec![BigRational::zero(); self.rank];
        for gen in &self.generators {
            let d = g.dot(gen);
            if d <= BigInt::zero() {
                continue; // zero generator (a positive grading excludes others)
            }
            for j in 0..self.rank {
                let c = BigRational::new(bound * &gen.0[j], d.clone());
                if c < lo[j] {
                    lo[j] = c.clone();
                }
                if c > hi[j] {
                    hi[j] = c;
                }
            }
        }
        let lo: Vec<BigInt> = lo.iter().map(|c| c.floor().to_integer()).collect();
        let hi: Vec<BigInt> = hi.iter().map(|c| c.ceil().to_integer()).collect();

        let mut out = Vec::new();
        let mut cur = lo.clone();
        'scan: loop {
            let p = LatticePoint(cur.clone());
            if self.contains(&p) && g.dot(&p) <= *bound {
                out.push(p);
            }
            // Odometer increment.
            for j in (0..self.rank).rev() {
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    for (jj, c) in cur.iter_mut().enumerate().skip(j + 1) {
                        *c = lo[jj].clone();
                    }
                    continue 'scan;
                }
            }
            break;
        }
        sort_graded(&mut out, g);
        out
    }
}

/// Sort points by (grading value, lexicographic coordinates).
pub fn sort_graded(points: &mut [LatticePoint], g: &DualVector) {
    points.sort_by(|a, b| g.dot(a).cmp(&g.dot(b)).then_with(|| a.cmp(b)));
}

/// Fourier-Motzkin elimination of the first `eliminate` coordinates from a
/// homogeneous system of inequalities `row . vars >= 0`. Rows are
/// gcd-reduced and deduplicated after every step.
fn fourier_motzkin(rows: Vec<Vec<BigInt>>, eliminate: usize) -> Vec<Vec<BigInt>> {
    let mut current: BTreeSet<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| reduce_row(&r))
        .filter(|r| !r.iter().all(|c| c.is_zero()))
        .collect();
    for var in 0..eliminate {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut keep = BTreeSet::new();
        for row in current {
            match row[var].sign() {
                num::bigint::Sign::Plus => pos.push(row),
                num::bigint::Sign::Minus => neg.push(row),
                num::bigint::Sign::NoSign => {
                    keep.insert(row);
                }
            }
        }
        for p in &pos {
            for n in &neg {
                // p[var] * n - n[var] * p has zero coefficient at var; with
                // p[var] > 0 > n[var] the combination p[var]*n + (-n[var])*p
                // is the valid nonnegative combination.
                let combined: Vec<BigInt> = p
                    .iter()
                    .zip(n)
                    .map(|(pc, nc)| &p[var] * nc - &n[var] * pc)
                    .collect();
                let combined = reduce_row(&combined);
                if !combined.iter().all(|c| c.is_zero()) {
                    keep.insert(combined);
                }
            }
        }
        current = keep;
    }
    current
        .into_iter()
        .map(|r| r[eliminate..].to_vec())
        .collect()
}

fn reduce_row(row: &[BigInt]) -> Vec<BigInt> {
    let g = vec_gcd(row);
    if g.is_zero() || g.is_one() {
        row.to_vec()
    } else {
        row.iter().map(|c| c / &g).collect()
    }
}

/// Rank of an integer matrix, by exact rational elimination.
pub fn int_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|c| BigRational::from(c.clone())).collect())
        .collect();
    rref(&mut mat).len()
}

/// Rank of a matrix whose columns are the given lattice points.
pub fn column_rank(cols: &[LatticePoint]) -> usize {
    let rows: Vec<Vec<BigInt>> = cols.iter().map(|c| c.0.clone()).collect();
    int_rank(&rows) // rank is transpose-invariant
}

/// A primitive integer basis of `{x : row . x = 0 for every row}`.
fn int_kernel_basis(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|c| BigRational::from(c.clone())).collect())
        .collect();
    let pivots = rref(&mut mat);
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (row_idx, &pc) in pivots.iter().enumerate() {
            v[pc] = -mat[row_idx][free].clone();
        }
        basis.push(clear_denominators(&v));
    }
    basis
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(mat: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let nrows = mat.len();
    let ncols = mat.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        let Some(pivot_row) = (row..nrows).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pivot_row);
        let inv = mat[row][col].clone().recip();
        for c in col..ncols {
            let val = &mat[row][c] * &inv;
            mat[row][c] = val;
        }
        for i in 0..nrows {
            if i != row && !mat[i][col].is_zero() {
                let factor = mat[i][col].clone();
                for c in col..ncols {
                    let val = &mat[i][c] - &(&factor * &mat[row][c]);
                    mat[i][c] = val;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in v {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|c| (c * BigRational::from(lcm.clone())).to_integer()).collect();
    reduce_row(&ints)
}

/// Orthogonal projection of `a` onto the orthogonal complement of
/// `span(kernel)` (i.e. onto the rational span of the generators), returned
/// with cleared denominators. `None` if the projection is zero.
fn project_onto_rowspace(a: &LatticePoint, kernel: &[Vec<BigInt>]) -> Option<LatticePoint> {
    if kernel.is_empty() {
        return Some(a.clone());
    }
    let k = kernel.len();
    // Solve (K K^T) c = K a, then a_span = a - K^T c.
    let mut gram: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); k + 1]; k];
    for i in 0..k {
        for j in 0..k {
            let dot: BigInt = kernel[i].iter().zip(&kernel[j]).map(|(x, y)| x * y).sum();
            gram[i][j] = BigRational::from(dot);
        }
        let rhs: BigInt = kernel[i].iter().zip(&a.0).map(|(x, y)| x * y).sum();
        gram[i][k] = BigRational::from(rhs);
    }
    let pivots = rref(&mut gram);
    debug_assert_eq!(pivots.len(), k, "Gram matrix of a basis is invertible");
    let coeffs: Vec<BigRational> = (0..k).map(|i| gram[i][k].clone()).collect();
    let mut proj: Vec<BigRational> = a.0.iter().map(|c| BigRational::from(c.clone())).collect();
    for (i, kv) in kernel.iter().enumerate() {
        for (j, x) in kv.iter().enumerate() {
            let val = &proj[j] - &(&coeffs[i] * &BigRational::from(x.clone()));
            proj[j] = val;
        }
    }
    let ints = clear_denominators(&proj);
    if ints.iter().all(|c| c.is_zero()) {
        None
    } else {
        Some(LatticePoint(ints))
    }
}

/// Exact feasibility of `p = sum t_i g_i` with rational `t_i >= 0`, decided
/// by Fourier-Motzkin elimination with a constant column. This is an
/// independent route to cone membership used to validate facet descriptions.
pub fn is_rational_combination(gens: &[LatticePoint], p: &LatticePoint) -> bool {
    let m = gens.len();
    let rank = p.rank();
    // Variables [t_1..t_m | 1]: row . (t, 1) >= 0.
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..rank {
        let mut row = vec![BigInt::zero(); m + 1];
        for (i, g) in gens.iter().enumerate() {
            row[i] = g.0[j].clone();
        }
        row[m] = -&p.0[j];
        rows.push(row.iter().map(|c| -c).collect());
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); m + 1];
        row[i] = BigInt::one();
        rows.push(row);
    }
    let projected = fourier_motzkin(rows, m);
    projected.iter().all(|r| !r[0].is_negative())
}
