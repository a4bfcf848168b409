//! The basic function for the reductive-monoid family attached to GL_N with
//! its standard representation: Hall-Littlewood expansion through the
//! Kostka matrix, spherical-transform bookkeeping, and the resulting
//! coset-wise values.
//!
//! All arithmetic is exact, in a single variable `v` with `v^2 = q`.

pub mod sympoly;
pub mod tableaux;

pub use sympoly::{monomial_symmetric, schur, sym_power_character, sym_power_of, SymPolynomial};
pub use tableaux::{
    canonical, charge, dominates, is_partition, kostka_foulkes, partitions_of, reading_word,
    semistandard_tableaux, ssyt_count, weight, Partition,
};

use crate::error::{ArcError, Result};
use crate::laurent::Laurent;
use num::{BigInt, One};
use std::collections::BTreeMap;

/// Which way the modulus-character twist goes. The two choices are exchanged
/// by `v -> v^{-1}`; `Plus` is the default, fixed by requiring the value 1 on
/// every coset of the smooth monoid `Mat_N`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Convention {
    #[default]
    Plus,
    Minus,
}

/// A finitely supported function on dominant `GL_N` weights with
/// v-Laurent values: an element of the spherical Hecke algebra in the
/// double-coset basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    pub n_gl: usize,
    pub values: BTreeMap<Vec<i64>, Laurent>,
}

impl HeckeElement {
    pub fn zero(n_gl: usize) -> Self {
        HeckeElement {
            n_gl,
            values: BTreeMap::new(),
        }
    }

    pub fn value(&self, mu: &[i64]) -> Laurent {
        self.values.get(mu).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.values.keys()
    }
}

/// Weakly decreasing integer vector.
pub fn is_dominant(mu: &[i64]) -> bool {
    mu.windows(2).all(|w| w[0] >= w[1])
}

/// Twice the pairing of `mu` with the half-sum of positive roots of `GL_N`
/// (`N = mu.len()`), i.e. the v-exponent `sum_i (N + 1 - 2i) mu_i`. Returned
/// doubled so that it stays integral.
pub fn nu_exponent(mu: &[i64]) -> i64 {
    let n = mu.len() as i64;
    mu.iter()
        .enumerate()
        .map(|(i, &m)| (n + 1 - 2 * (i as i64 + 1)) * m)
        .sum()
}

fn partition_to_weight(p: &[u64], n_gl: usize) -> Vec<i64> {
    let mut w: Vec<i64> = p.iter().map(|&x| x as i64).collect();
    w.resize(n_gl, 0);
    w
}

/// The Kostka matrix `K[i][j] = K_{lambda_i, mu_j}(t)` over partitions of
/// `n` with at most `nvars` parts, listed in decreasing lexicographic order
/// (upper unitriangular since decreasing lex refines dominance).
pub fn kostka_matrix(n: u64, nvars: usize) -> (Vec<Partition>, Vec<Vec<Laurent>>) {
    let parts = partitions_of(n, nvars);
    let m = parts.len();
    let mut k = vec![vec![Laurent::zero(); m]; m];
    for i in 0..m {
        for j in 0..m {
            if dominates(&parts[i], &parts[j]) {
                k[i][j] = kostka_foulkes(&parts[i], &parts[j]).unwrap();
            }
        }
    }
    (parts, k)
}

/// Inverse of an upper unitriangular matrix over the Laurent ring, by back
/// substitution (no division needed).
pub fn unitriangular_inverse(k: &[Vec<Laurent>]) -> Vec<Vec<Laurent>> {
    let m = k.len();
    let mut inv = vec![vec![Laurent::zero(); m]; m];
    for i in (0..m).rev() {
        inv[i][i] = Laurent::one();
        for j in i + 1..m {
            let mut acc = Laurent::zero();
            for l in i + 1..=j {
                acc += &(&k[i][l] * &inv[l][j]);
            }
            inv[i][j] = -&acc;
        }
    }
    inv
}

/// The Hall-Littlewood polynomial `P_mu(x_1..x_nvars; t)` with the
/// parameter specialized to `t_assignment` (itself a v-Laurent polynomial).
pub fn hl_polynomial(nvars: usize, mu: &[u64], t_assignment: &Laurent) -> Result<SymPolynomial> {
    let mu = canonical(mu.to_vec());
    if !is_partition(&mu) {
        return Err(ArcError::Domain("not a partition".into()));
    }
    if mu.len() > nvars {
        return Err(ArcError::Domain(
            "partition has more parts than variables".into(),
        ));
    }
    let n = weight(&mu);
    let (parts, k) = kostka_matrix(n, nvars);
    let kinv = unitriangular_inverse(&k);
    let row = parts.iter().position(|p| *p == mu).unwrap();
    let mut out = SymPolynomial::zero(nvars);
    for (col, lambda) in parts.iter().enumerate() {
        let c = kinv[row][col].substitute(t_assignment);
        if !c.is_zero() {
            out = out.add(&schur(nvars, lambda)?.scale(&c));
        }
    }
    Ok(out)
}

/// Expand a symmetric polynomial in the Hall-Littlewood P-basis at the given
/// parameter value: returns `c` with `f = sum_mu c[mu] P_mu(x; t)`.
pub fn hall_littlewood_expand(
    f: &SymPolynomial,
    t_assignment: &Laurent,
) -> Result<BTreeMap<Partition, Laurent>> {
    let schur_coeffs = f.schur_expand()?;
    // Group the Schur support by degree; the K-matrix is block diagonal
    // across degrees.
    let mut by_degree: BTreeMap<u64, Vec<(Partition, Laurent)>> = BTreeMap::new();
    for (lambda, b) in schur_coeffs {
        by_degree.entry(weight(&lambda)).or_default().push((lambda, b));
    }
    let mut out: BTreeMap<Partition, Laurent> = BTreeMap::new();
    for (n, block) in by_degree {
        let (parts, k) = kostka_matrix(n, f.nvars);
        for (col, mu) in parts.iter().enumerate() {
            let mut c = Laurent::zero();
            for (lambda, b) in &block {
                let row = parts.iter().position(|p| p == lambda).unwrap();
                if !k[row][col].is_zero() {
                    c += &(&k[row][col].substitute(t_assignment) * b);
                }
            }
            if !c.is_zero() {
                out.insert(mu.clone(), c);
            }
        }
    }
    Ok(out)
}

/// Verify that `hall_littlewood_expand` inverts the forward transform on
/// every `P_mu` with `|mu| <= bound`, at a generic parameter value.
pub fn satake_roundtrip_check(nvars: usize, bound: u64) -> Result<bool> {
    let generic_t = Laurent::monomial(1, BigInt::one());
    for n in 0..=bound {
        for mu in partitions_of(n, nvars) {
            let p = hl_polynomial(nvars, &mu, &generic_t)?;
            let expansion = hall_littlewood_expand(&p, &generic_t)?;
            let mut expected = BTreeMap::new();
            expected.insert(mu, Laurent::one());
            if expansion != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn require_standard_rep(n_gl: usize, lambda: &[u64]) -> Result<()> {
    if n_gl == 0 {
        return Err(ArcError::Unsupported("need at least one variable".into()));
    }
    if canonical(lambda.to_vec()) != vec![1] {
        return Err(ArcError::Unsupported(
            "only the standard representation is supported here".into(),
        ));
    }
    Ok(())
}

/// The spherical Hecke element whose transform is the character of
/// `Sym^n` of the standard representation: expand that character in the
/// Hall-Littlewood P-basis at `t = q^{-1}` and twist each coefficient by
/// the modulus character.
pub fn psi_n(n_gl: usize, lambda: &[u64], n: u64, convention: Convention) -> Result<HeckeElement> {
    require_standard_rep(n_gl, lambda)?;
    let f = sym_power_character(n_gl, lambda, n)?;
    let q_inv = Laurent::monomial(-2, BigInt::one());
    let expansion = hall_littlewood_expand(&f, &q_inv)?;
    let mut out = HeckeElement::zero(n_gl);
    for (mu, c) in expansion {
        let w = partition_to_weight(&mu, n_gl);
        let mut value = &c * &Laurent::monomial(-nu_exponent(&w), BigInt::one());
        if convention == Convention::Minus {
            value = value.stretch(-1);
        }
        out.values.insert(w, value);
    }
    Ok(out)
}

/// The basic-function value on the coset indexed by `mu` inside the monoid
/// `Mat_N`: the modulus-shift multiplier times `psi_{|mu|}(mu)`.
pub fn ic_lmonoid_value(
    n_gl: usize,
    lambda: &[u64],
    mu: &[i64],
    convention: Convention,
) -> Result<Laurent> {
    require_standard_rep(n_gl, lambda)?;
    if mu.len() != n_gl {
        return Err(ArcError::DimensionMismatch {
            expected: n_gl,
            got: mu.len(),
        });
    }
    if !is_dominant(mu) {
        return Err(ArcError::Domain("weight is not dominant".into()));
    }
    if mu.iter().any(|&m| m < 0) {
        return Err(ArcError::Domain(
            "weight has a negative entry: coset lies outside the monoid's integral points".into(),
        ));
    }
    let n: i64 = mu.iter().sum();
    let psi = psi_n(n_gl, lambda, n as u64, convention)?;
    // q^{n <nu, std>} = v^{n (N-1)}, with the sign following the convention.
    let shift_exp = match convention {
        Convention::Plus => n * (n_gl as i64 - 1),
        Convention::Minus => -n * (n_gl as i64 - 1),
    };
    Ok(&psi.value(mu) * &Laurent::monomial(shift_exp, BigInt::one()))
}
