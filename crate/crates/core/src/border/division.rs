use std::cmp::Reverse;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{well_order, BorderPrebasis};
use crate::coeff::bezout_many;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Term};

/// One pass through the division loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisionStep {
    /// 3 (remainder), 4 (scalar border) or 5 (monomial border).
    pub step: u8,
    pub index: u64,
    pub term: Option<Term>,
    /// `(element, multiplier)` pairs subtracted in this step.
    pub used: Vec<(usize, Polynomial)>,
    pub after: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisionResult {
    pub cofactors: Vec<Polynomial>,
    pub remainder: Polynomial,
    pub trace: Vec<DivisionStep>,
}

impl DivisionResult {
    pub fn remainder_coeffs(&self) -> BTreeMap<Monomial, BigInt> {
        self.remainder
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// `Σ f_i·g_i + remainder`.
    pub fn reconstruct(&self, pb: &BorderPrebasis) -> Polynomial {
        let mut out = self.remainder.clone();
        for (f, g) in self.cofactors.iter().zip(pb.polynomials()) {
            out = &out + &(f * &g);
        }
        out
    }
}

/// Default bound on scalar-border eliminations: `|∂O_s|³`.
pub fn default_step_budget(pb: &BorderPrebasis) -> u64 {
    let s = pb.order_ideal().scalar_border().len() as u64;
    s.pow(3).max(1)
}

pub fn border_divide(pb: &BorderPrebasis, f: &Polynomial) -> Result<DivisionResult> {
    border_divide_with_budget(pb, f, default_step_budget(pb))
}

pub fn border_divide_with_budget(
    pb: &BorderPrebasis,
    f: &Polynomial,
    budget: u64,
) -> Result<DivisionResult> {
    if f.arity() != pb.nvars() {
        return Err(Error::ArityMismatch {
            expected: pb.nvars(),
            found: f.arity(),
        });
    }
    let order = well_order(pb)?;
    let oi = pb.order_ideal();
    let elems = pb.elements();
    let polys = pb.polynomials();
    let one = Monomial::one(pb.nvars());

    let mut rank: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for &i in &order {
        let m = &elems[i].border.monomial;
        if oi.contains_monomial(m) {
            let k = rank.len();
            rank.entry(m).or_insert(k);
        }
    }
    let monomial_border = pb.monomial_indices();

    let mut h = f.clone();
    let mut cofactors = vec![Polynomial::zero(pb.nvars()); elems.len()];
    let mut trace = Vec::new();
    let mut scalar_steps = 0u64;

    while !h.is_zero() {
        let ind = oi.index_poly(&h)?;
        if ind == 0 {
            trace.push(DivisionStep {
                step: 3,
                index: 0,
                term: None,
                used: Vec::new(),
                after: h.clone(),
            });
            break;
        }

        // Step 5: a maximal-index term outside Mon(O)
        let mut best: Option<(usize, Term)> = None;
        for (g, c) in h.iter() {
            if oi.contains_monomial(g) || oi.monomial_distance(g) != ind {
                continue;
            }
            let i = *monomial_border
                .iter()
                .find(|&&i| {
                    let b = &elems[i].border.monomial;
                    b.divides(g) && g.degree() - b.degree() == ind - 1
                })
                .expect("every term of positive distance has a border divisor one step out");
            let key = (i, Reverse(g.degree()), Reverse(g.clone()));
            let better = match &best {
                None => true,
                Some((j, t)) => key < (*j, Reverse(t.monomial.degree()), Reverse(t.monomial.clone())),
            };
            if better {
                best = Some((i, Term::new(c.clone(), g.clone())));
            }
        }
        if let Some((i, t)) = best {
            let mu = elems[i]
                .border
                .monomial
                .quotient_of(&t.monomial)
                .expect("divides");
            h.add_scaled(&-&t.coeff, &mu, &polys[i]);
            cofactors[i].add_term(&t.coeff, &mu);
            trace.push(DivisionStep {
                step: 5,
                index: ind,
                term: Some(t.clone()),
                used: vec![(i, Polynomial::from_term(t.coeff, mu))],
                after: h.clone(),
            });
            continue;
        }

        // Step 4: index-1 terms on scalar border monomials, first in the well order
        scalar_steps += 1;
        if scalar_steps > budget {
            return Err(Error::StepBudgetExceeded { budget });
        }
        let t = h
            .terms()
            .filter(|t| oi.index_term(&t.coeff, &t.monomial).ok() == Some(1))
            .min_by_key(|t| rank[&t.monomial])
            .expect("index one with no monomial border term");
        let idx: Vec<usize> = (0..elems.len())
            .filter(|&i| elems[i].border.monomial == t.monomial)
            .collect();
        let coeffs: Vec<BigInt> = idx.iter().map(|&i| elems[i].border.coeff.clone()).collect();
        let (d, us) = bezout_many(&coeffs);
        let q = &t.coeff / &d;
        let mut used = Vec::new();
        for (&i, u) in idx.iter().zip(&us) {
            let b = &q * u;
            if b.is_zero() {
                continue;
            }
            h.add_scaled(&-&b, &one, &polys[i]);
            cofactors[i].add_term(&b, &one);
            used.push((i, Polynomial::constant(pb.nvars(), b)));
        }
        debug_assert!(h.coeff(&t.monomial).is_zero());
        trace.push(DivisionStep {
            step: 4,
            index: 1,
            term: Some(t),
            used,
            after: h.clone(),
        });
    }

    Ok(DivisionResult {
        cofactors,
        remainder: h,
        trace,
    })
}

pub fn o_remainder(pb: &BorderPrebasis, f: &Polynomial) -> Result<Polynomial> {
    border_divide(pb, f).map(|r| r.remainder)
}

/// Rewrites every coefficient on a scalar border monomial to its canonical
/// representative, walking the well order once per pass.
pub(crate) fn canonicalize(pb: &BorderPrebasis, order: &[usize], mut h: Polynomial) -> Polynomial {
    let oi = pb.order_ideal();
    let elems = pb.elements();
    let polys = pb.polynomials();
    let one = Monomial::one(pb.nvars());
    let mut seen: Vec<&Monomial> = Vec::new();
    for &i in order {
        let m = &elems[i].border.monomial;
        if oi.contains_monomial(m) && !seen.contains(&m) {
            seen.push(m);
        }
    }
    for _ in 0..=seen.len() {
        let mut changed = false;
        for m in &seen {
            let a = h.coeff(m);
            let ideal = oi.ideal_at(m);
            let rep = ideal.reduce(&a);
            if rep == a {
                continue;
            }
            changed = true;
            let idx: Vec<usize> = (0..elems.len())
                .filter(|&i| elems[i].border.monomial == **m)
                .collect();
            let coeffs: Vec<BigInt> = idx.iter().map(|&i| elems[i].border.coeff.clone()).collect();
            let (d, us) = bezout_many(&coeffs);
            let q = (&a - &rep) / &d;
            for (&i, u) in idx.iter().zip(&us) {
                h.add_scaled(&-(&q * u), &one, &polys[i]);
            }
            debug_assert_eq!(h.coeff(m), rep);
        }
        if !changed {
            return h;
        }
    }
    debug_assert!(false, "canonicalization did not settle");
    h
}
