//! Symmetric polynomials in a fixed number of variables: Schur polynomials
//! by tableau enumeration, symmetric-power characters by the power-sum
//! recurrence, and exact Schur-basis expansion.

use crate::error::{ArcError, Result};
use crate::laurent::Laurent;
use crate::satake::tableaux::{canonical, content, semistandard_tableaux, Partition};
use num::BigInt;
use std::collections::BTreeMap;

/// A polynomial in `nvars` variables with v-Laurent coefficients, expected
/// to be invariant under permutations of the variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPolynomial {
    pub nvars: usize,
    terms: BTreeMap<Vec<u64>, Laurent>,
}

impl SymPolynomial {
    pub fn zero(nvars: usize) -> Self {
        SymPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = SymPolynomial::zero(nvars);
        p.add_term(vec![0; nvars], &Laurent::one());
        p
    }

    pub fn add_term(&mut self, exps: Vec<u64>, coeff: &Laurent) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Laurent::zero);
        *entry += coeff;
        if entry.is_zero() {
            let key: Vec<u64> = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u64>, &Laurent)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u64]) -> Laurent {
        self.terms.get(exps).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn add(&self, other: &SymPolynomial) -> SymPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SymPolynomial) -> SymPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }

    pub fn mul(&self, other: &SymPolynomial) -> SymPolynomial {
        let mut out = SymPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Laurent) -> SymPolynomial {
        let mut out = SymPolynomial::zero(self.nvars);
        for (e, coeff) in &self.terms {
            out.add_term(e.clone(), &(coeff * c));
        }
        out
    }

    /// Substitute `x_i -> x_i^k` (the degree-k power-sum plethysm).
    pub fn stretch_vars(&self, k: u64) -> SymPolynomial {
        let mut out = SymPolynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.iter().map(|a| a * k).collect(), c);
        }
        out
    }

    /// Divide every coefficient exactly by `d`.
    pub fn div_exact(&self, d: u64) -> SymPolynomial {
        let d = BigInt::from(d);
        let mut out = SymPolynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &c.div_exact(&d));
        }
        out
    }

    /// Evaluate at `x_1 = ... = x_n = 1` (the dimension when the polynomial
    /// is a character).
    pub fn eval_ones(&self) -> Laurent {
        let mut acc = Laurent::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// True iff the term map is invariant under permutations of the
    /// variables (checked on adjacent transpositions).
    pub fn is_symmetric(&self) -> bool {
        for (e, c) in &self.terms {
            for i in 0..self.nvars.saturating_sub(1) {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                if self.coefficient(&swapped) != *c {
                    return false;
                }
            }
        }
        true
    }

    /// Exact expansion in the Schur basis, by repeated subtraction of the
    /// lexicographically leading monomial's Schur polynomial.
    pub fn schur_expand(&self) -> Result<BTreeMap<Partition, Laurent>> {
        if !self.is_symmetric() {
            return Err(ArcError::Domain("polynomial is not symmetric".into()));
        }
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some((exps, coeff)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let lambda = canonical(exps.clone());
            // The lex-max exponent of a symmetric polynomial is weakly
            // decreasing; anything else means the input was not symmetric.
            let mut sorted = lambda.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if sorted != lambda {
                return Err(ArcError::Domain("polynomial is not symmetric".into()));
            }
            let s = schur(self.nvars, &lambda)?;
            rest = rest.sub(&s.scale(&coeff));
            let entry = out.entry(lambda).or_insert_with(Laurent::zero);
            *entry += &coeff;
        }
        out.retain(|_, c: &mut Laurent| !c.is_zero());
        Ok(out)
    }
}

/// The Schur polynomial `s_lambda(x_1..x_n)`, as the content generating
/// function over semistandard tableaux of shape `lambda`.
pub fn schur(nvars: usize, lambda: &[u64]) -> Result<SymPolynomial> {
    let lambda = canonical(lambda.to_vec());
    if lambda.len() > nvars {
        return Err(ArcError::Domain(
            "partition has more parts than variables".into(),
        ));
    }
    let mut out = SymPolynomial::zero(nvars);
    for t in semistandard_tableaux(&lambda, nvars as u8) {
        out.add_term(content(&t, nvars as u8), &Laurent::one());
    }
    Ok(out)
}

/// The monomial symmetric polynomial `m_mu(x_1..x_n)`.
pub fn monomial_symmetric(nvars: usize, mu: &[u64]) -> Result<SymPolynomial> {
    let mu = canonical(mu.to_vec());
    if mu.len() > nvars {
        return Err(ArcError::Domain(
            "partition has more parts than variables".into(),
        ));
    }
    let mut padded = mu.clone();
    padded.resize(nvars, 0);
    let mut out = SymPolynomial::zero(nvars);
    let mut perm = padded.clone();
    perm.sort_unstable();
    loop {
        out.add_term(perm.clone(), &Laurent::one());
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [u64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The character of `Sym^n` of the representation with character `f`,
/// through the power-sum recurrence
/// `n * h_n[f] = sum_{k=1}^{n} p_k[f] * h_{n-k}[f]` with
/// `p_k[f](x) = f(x_1^k, ..., x_N^k)`.
pub fn sym_power_of(f: &SymPolynomial, n: u64) -> SymPolynomial {
    let mut h: Vec<SymPolynomial> = vec![SymPolynomial::one(f.nvars)];
    for j in 1..=n {
        let mut acc = SymPolynomial::zero(f.nvars);
        for k in 1..=j {
            acc = acc.add(&f.stretch_vars(k).mul(&h[(j - k) as usize]));
        }
        h.push(acc.div_exact(j));
    }
    h.pop().unwrap()
}

/// `Sym^n` of the irreducible `GL_N` representation with highest weight
/// `lambda`.
pub fn sym_power_character(nvars: usize, lambda: &[u64], n: u64) -> Result<SymPolynomial> {
    Ok(sym_power_of(&schur(nvars, lambda)?, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    #[test]
    fn schur_small_cases() {
        let s1 = schur(2, &[1]).unwrap();
        assert_eq!(s1.coefficient(&[1, 0]), Laurent::one());
        assert_eq!(s1.coefficient(&[0, 1]), Laurent::one());
        assert_eq!(s1.terms().count(), 2);

        let s2 = schur(2, &[2]).unwrap();
        assert_eq!(s2.coefficient(&[2, 0]), Laurent::one());
        assert_eq!(s2.coefficient(&[1, 1]), Laurent::one());
        assert_eq!(s2.coefficient(&[0, 2]), Laurent::one());
        assert_eq!(s2.terms().count(), 3);

        let s21 = schur(3, &[2, 1]).unwrap();
        assert_eq!(s21.eval_ones(), Laurent::from_i64(8));

        assert!(schur(2, &[1, 1, 1]).is_err());
    }

    #[test]
    fn sym_power_of_standard_is_complete_homogeneous() {
        for n in 0..=5u64 {
            for nvars in 1..=3usize {
                let h = sym_power_character(nvars, &[1], n).unwrap();
                let s = schur(nvars, &[n]).unwrap();
                assert_eq!(h, s);
            }
        }
    }

    #[test]
    fn sym_power_dimension_series() {
        // sum_n dim Sym^n(V) y^n = (1 - y)^{-dim V}: the coefficient is
        // C(dim + n - 1, n).
        let dim_choose = |d: u64, n: u64| -> BigInt {
            let mut acc = BigInt::one();
            for i in 0..n {
                acc = acc * BigInt::from(d + i) / BigInt::from(i + 1);
            }
            acc
        };
        for (nvars, lambda) in [(2usize, vec![1u64]), (3, vec![1]), (2, vec![2]), (3, vec![2, 1])] {
            let dim_l = schur(nvars, &lambda).unwrap().eval_ones();
            let d = u64::try_from(&dim_l.coeff(0)).unwrap();
            for n in 0..=8u64 {
                let dim_sym = sym_power_character(nvars, &lambda, n).unwrap().eval_ones();
                assert_eq!(dim_sym, Laurent::constant(dim_choose(d, n)), "lambda={:?} n={}", lambda, n);
            }
        }
    }

    #[test]
    fn schur_expansion_roundtrip() {
        let s21 = schur(3, &[2, 1]).unwrap();
        let s3 = schur(3, &[3]).unwrap();
        let f = s21.add(&s3.scale(&Laurent::from_i64(5)));
        let expansion = f.schur_expand().unwrap();
        assert_eq!(expansion.len(), 2);
        assert_eq!(expansion[&vec![2, 1]], Laurent::one());
        assert_eq!(expansion[&vec![3]], Laurent::from_i64(5));

        // h_2 = s_(2) in the Schur basis; product h_1 * h_1 = s_(2) + s_(1,1).
        let h1 = schur(2, &[1]).unwrap();
        let sq = h1.mul(&h1);
        let expansion = sq.schur_expand().unwrap();
        assert_eq!(expansion[&vec![2]], Laurent::one());
        assert_eq!(expansion[&vec![1, 1]], Laurent::one());
    }

    #[test]
    fn non_symmetric_input_is_rejected() {
        let mut p = SymPolynomial::zero(2);
        p.add_term(vec![1, 0], &Laurent::one());
        assert!(p.schur_expand().is_err());
    }

    #[test]
    fn monomial_symmetric_polys() {
        let m = monomial_symmetric(3, &[2, 1]).unwrap();
        assert_eq!(m.terms().count(), 6);
        assert_eq!(m.coefficient(&[2, 1, 0]), Laurent::one());
        assert_eq!(m.coefficient(&[0, 1, 2]), Laurent::one());
        let m11 = monomial_symmetric(2, &[1, 1]).unwrap();
        assert_eq!(m11.terms().count(), 1);
    }
}
