use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// A term `c·x^α` with `c ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Term {
    pub coeff: BigInt,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: BigInt, monomial: Monomial) -> Self {
        debug_assert!(!coeff.is_zero(), "terms carry nonzero coefficients");
        Term { coeff, monomial }
    }

    pub fn to_poly(&self) -> Polynomial {
        Polynomial::from_term(self.coeff.clone(), self.monomial.clone())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*{}", self.coeff, self.monomial)
        }
    }
}

/// Sparse polynomial over ℤ. No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::from_term(c, Monomial::one(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_term(BigInt::one(), Monomial::var(nvars, i))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_term(BigInt::one(), m)
    }

    pub fn from_term(c: BigInt, m: Monomial) -> Self {
        let mut p = Polynomial::zero(m.arity());
        p.add_term(&c, &m);
        p
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, Monomial)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (c, m) in terms {
            assert_eq!(m.arity(), nvars, "monomial arity mismatch");
            p.add_term(&c, &m);
        }
        p
    }

    /// Convenience constructor from small integer data.
    pub fn from_i64(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(c, e)| (BigInt::from(*c), Monomial::new(e.to_vec()))),
        )
    }

    pub fn arity(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Monomial, BigInt> {
        self.terms.iter()
    }

    pub fn terms(&self) -> impl Iterator<Item = Term> + '_ {
        self.terms
            .iter()
            .map(|(m, c)| Term::new(c.clone(), m.clone()))
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `self += c·m`.
    pub fn add_term(&mut self, c: &BigInt, m: &Monomial) {
        assert_eq!(m.arity(), self.nvars, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m.clone()) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c·m·g`.
    pub fn add_scaled(&mut self, c: &BigInt, m: &Monomial, g: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (gm, gc) in &g.terms {
            self.add_term(&(c * gc), &gm.mul(m));
        }
    }

    /// `c·m·self`.
    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        out.add_scaled(c, m, self);
        out
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Leading term under `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<Term> {
        self.terms
            .iter()
            .max_by(|a, b| ord.compare(a.0, b.0))
            .map(|(m, c)| Term::new(c.clone(), m.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<Monomial> {
        self.leading_term(ord).map(|t| t.monomial)
    }

    pub fn leading_coeff(&self, ord: &MonomialOrder) -> Result<BigInt> {
        self.leading_term(ord).map(|t| t.coeff)
    }

    /// Terms sorted in descending `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<Term> {
        let mut v: Vec<Term> = self.terms().collect();
        v.sort_by(|a, b| ord.compare(&b.monomial, &a.monomial));
        v
    }

    /// `self` with the terms for which `keep` is false removed.
    pub fn filter_terms<F>(&self, mut keep: F) -> Polynomial
    where
        F: FnMut(&Monomial, &BigInt) -> bool,
    {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, c)| keep(m, c))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        Ok(self * other)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c, m);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(&-c, m);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &rhs.terms {
            out.add_scaled(c, m, self);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}
