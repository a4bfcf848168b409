//! Laurent polynomials in a single variable with `BigInt` coefficients.
//!
//! The same type serves the half-power variable `v` (with `v^2 = q`) on the
//! Hecke side and the Hall-Littlewood parameter `t`; the variable name is a
//! matter of interpretation, only the exponent/coefficient data is stored.

use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A Laurent polynomial `sum c_e x^e` with integer exponents.
///
/// Zero coefficients are never stored, so structural equality is exact
/// ring equality.
#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Laurent { terms }
    }

    pub fn constant(c: BigInt) -> Self {
        Laurent::monomial(0, c)
    }

    pub fn from_i64(c: i64) -> Self {
        Laurent::constant(BigInt::from(c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// True iff the polynomial is a constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Substitute `x -> x^k` (multiplies every exponent by `k`).
    pub fn stretch(&self, k: i64) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in &self.terms {
            out.add_term(e * k, c);
        }
        out
    }

    /// Divide every coefficient by `d`, panicking if any division is inexact.
    pub fn div_exact(&self, d: &BigInt) -> Laurent {
        assert!(!d.is_zero());
        let mut out = Laurent::zero();
        for (e, c) in &self.terms {
            let (q, r) = num::Integer::div_rem(c, d);
            assert!(r.is_zero(), "inexact coefficient division");
            out.add_term(*e, &q);
        }
        out
    }

    pub fn pow(&self, k: u64) -> Laurent {
        let mut acc = Laurent::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute another Laurent polynomial for the variable. Requires all
    /// exponents to be nonnegative.
    pub fn substitute(&self, x: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in &self.terms {
            assert!(*e >= 0, "substitution needs nonnegative exponents");
            let p = x.pow(*e as u64);
            for (pe, pc) in &p.terms {
                out.add_term(*pe, &(pc * c));
            }
        }
        out
    }

    /// Evaluate at a rational value of the variable.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num::pow::pow(x.clone(), *e as usize)
            } else {
                num::pow::pow(x.clone(), (-*e) as usize).recip()
            };
            acc += BigRational::from(c.clone()) * p;
        }
        acc
    }

    /// Sum of all coefficients (evaluation at 1).
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*v", c)?,
                _ => write!(f, "{}*v^{}", c, e)?,
            }
        }
        Ok(())
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: i64) -> Laurent {
        Laurent::monomial(e, BigInt::one())
    }

    #[test]
    fn ring_ops() {
        let a = &v(1) + &v(-1);
        let b = &a * &a;
        // (v + v^-1)^2 = v^2 + 2 + v^-2
        assert_eq!(b.coeff(2), BigInt::one());
        assert_eq!(b.coeff(0), BigInt::from(2));
        assert_eq!(b.coeff(-2), BigInt::one());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = &v(3) - &v(3);
        assert!(a.is_zero());
        assert!(a.terms.is_empty());
    }

    #[test]
    fn stretch_and_eval() {
        let p = &Laurent::from_i64(1) + &v(2);
        assert_eq!(p.stretch(-1), &Laurent::from_i64(1) + &v(-2));
        let two = BigRational::from(BigInt::from(2));
        assert_eq!(p.eval(&two), BigRational::from(BigInt::from(5)));
    }
}
