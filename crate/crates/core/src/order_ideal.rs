//! Order ideals of terms over ℤ, their borders and the index function.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::coeff::CoefIdeal;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Term};

/// A monotone map from monomials to ideals of ℤ, given by its finite
/// support (every monomial outside the support maps to `⟨1⟩`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientIdealMapping {
    nvars: usize,
    support: BTreeMap<Monomial, CoefIdeal>,
}

impl CoefficientIdealMapping {
    /// Builds the mapping from `(monomial, generators)` pairs, checking
    /// arity, duplicates and monotonicity along divisibility.
    pub fn validate(nvars: usize, raw: &[(Monomial, Vec<BigInt>)]) -> Result<Self> {
        let mut all = BTreeMap::new();
        for (m, gens) in raw {
            if m.arity() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: m.arity(),
                });
            }
            if all
                .insert(m.clone(), CoefIdeal::from_generators(gens.iter()))
                .is_some()
            {
                return Err(Error::DuplicateMonomial(m.clone()));
            }
        }
        for (larger, big) in &all {
            for smaller in larger.divisors() {
                if smaller == *larger {
                    continue;
                }
                let small = all.get(&smaller).cloned().unwrap_or_else(CoefIdeal::unit);
                if !small.is_subset_of(big) {
                    return Err(Error::NotMonotone {
                        smaller,
                        larger: larger.clone(),
                    });
                }
            }
        }
        all.retain(|_, i| !i.is_unit());
        Ok(CoefficientIdealMapping {
            nvars,
            support: all,
        })
    }

    /// Trusts the caller on monotonicity; unit entries are dropped.
    pub(crate) fn from_support(nvars: usize, mut support: BTreeMap<Monomial, CoefIdeal>) -> Self {
        support.retain(|_, i| !i.is_unit());
        debug_assert!(support.keys().all(|m| m
            .divisors()
            .iter()
            .all(|d| support.get(d).is_some_and(|i| i.is_subset_of(&support[m])))));
        CoefficientIdealMapping { nvars, support }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn query(&self, m: &Monomial) -> CoefIdeal {
        self.support.get(m).cloned().unwrap_or_else(CoefIdeal::unit)
    }

    pub fn support(&self) -> &BTreeMap<Monomial, CoefIdeal> {
        &self.support
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Border {
    /// `∂O_m`
    pub monomial: BTreeSet<Monomial>,
    /// `∂O_s`, one term `gen·x^α` per torsion monomial.
    pub scalar: Vec<Term>,
}

impl Border {
    /// All border terms, scalar first.
    pub fn terms(&self) -> Vec<Term> {
        let mut out = self.scalar.clone();
        out.extend(
            self.monomial
                .iter()
                .map(|m| Term::new(BigInt::from(1), m.clone())),
        );
        out
    }

    pub fn len(&self) -> usize {
        self.monomial.len() + self.scalar.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderIdeal {
    mapping: CoefficientIdealMapping,
    monomials: BTreeSet<Monomial>,
}

impl OrderIdeal {
    pub fn new(mapping: CoefficientIdealMapping) -> Self {
        let monomials = mapping.support.keys().cloned().collect();
        OrderIdeal { mapping, monomials }
    }

    pub fn nvars(&self) -> usize {
        self.mapping.nvars
    }

    pub fn mapping(&self) -> &CoefficientIdealMapping {
        &self.mapping
    }

    /// `Mon(O)`
    pub fn monomials(&self) -> &BTreeSet<Monomial> {
        &self.monomials
    }

    pub fn ideal_at(&self, m: &Monomial) -> CoefIdeal {
        self.mapping.query(m)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    /// Whether `c·x^α` is a term of `O`: a nonzero canonical representative
    /// modulo `I_α` on a monomial of `O`.
    pub fn contains_term(&self, c: &BigInt, m: &Monomial) -> bool {
        !c.is_zero() && self.contains_monomial(m) && self.ideal_at(m).is_canonical(c)
    }

    /// The monomials `x_i·x^α ∉ Mon(O)` with `x^α ∈ Mon(O)`; `{1}` for
    /// the empty order ideal.
    pub fn monomial_border(&self) -> BTreeSet<Monomial> {
        if self.monomials.is_empty() {
            return [Monomial::one(self.nvars())].into_iter().collect();
        }
        let mut out = BTreeSet::new();
        for m in &self.monomials {
            for i in 0..self.nvars() {
                let n = m.times_var(i);
                if !self.monomials.contains(&n) {
                    out.insert(n);
                }
            }
        }
        out
    }

    pub fn scalar_border(&self) -> Vec<Term> {
        self.mapping
            .support
            .iter()
            .filter(|(_, i)| i.is_torsion())
            .map(|(m, i)| Term::new(i.generator().clone(), m.clone()))
            .collect()
    }

    pub fn borders(&self) -> Border {
        Border {
            monomial: self.monomial_border(),
            scalar: self.scalar_border(),
        }
    }

    /// `ℕ_k·Mon(O)`: products of `Mon(O)` with monomials of degree `≤ k`,
    /// built by repeated closure under multiplication by variables.
    pub fn closure(&self, k: u32) -> BTreeSet<Monomial> {
        let mut cur: BTreeSet<Monomial> = if self.monomials.is_empty() {
            [Monomial::one(self.nvars())].into_iter().collect()
        } else {
            self.monomials.clone()
        };
        let steps = if self.monomials.is_empty() { k.saturating_sub(1) } else { k };
        for _ in 0..steps {
            let mut next = cur.clone();
            for m in &cur {
                for i in 0..self.nvars() {
                    next.insert(m.times_var(i));
                }
            }
            cur = next;
        }
        cur
    }

    /// `∂^k O`, the monomials of `ℕ_k·Mon(O)` outside `ℕ_{k-1}·Mon(O)`.
    pub fn kth_border(&self, k: u32) -> Result<BTreeSet<Monomial>> {
        if k == 0 {
            return Err(Error::Precondition("border order must be at least 1".into()));
        }
        if k == 1 {
            return Ok(self.monomial_border());
        }
        let inner = self.closure(k - 1);
        Ok(self
            .closure(k)
            .into_iter()
            .filter(|m| !inner.contains(m))
            .collect())
    }

    /// Number of variable multiplications needed to reach `x^γ` from `O`:
    /// the least `deg(γ) − deg(α)` over `x^α ∈ Mon(O)` dividing `x^γ`, or
    /// `deg(γ) + 1` when `O` has no monomials.
    pub fn monomial_distance(&self, m: &Monomial) -> u64 {
        if self.monomials.is_empty() {
            return m.degree() + 1;
        }
        self.monomials
            .iter()
            .filter(|a| a.divides(m))
            .map(|a| m.degree() - a.degree())
            .min()
            .expect("1 lies in every nonempty order ideal")
    }

    /// `ind(c·x^γ)`: `0` for terms of `O` (up to reduction of `c`), `1` on
    /// scalar border positions, the distance from `O` elsewhere.
    pub fn index_term(&self, c: &BigInt, m: &Monomial) -> Result<u64> {
        if c.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if m.arity() != self.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: m.arity(),
            });
        }
        if self.contains_monomial(m) {
            return Ok(if self.ideal_at(m).contains(c) { 1 } else { 0 });
        }
        Ok(self.monomial_distance(m))
    }

    pub fn index_poly(&self, f: &Polynomial) -> Result<u64> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        f.iter()
            .map(|(m, c)| self.index_term(c, m))
            .try_fold(0, |acc, i| i.map(|i| acc.max(i)))
    }

    /// The terms of `f` whose index equals `ind(f)`.
    pub fn border_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let ind = self.index_poly(f)?;
        Ok(f.filter_terms(|m, c| self.index_term(c, m).ok() == Some(ind)))
    }
}
