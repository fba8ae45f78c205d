use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coeff::CoefIdeal;
use crate::error::{Error, Result};
use crate::order_ideal::OrderIdeal;
use crate::poly::{Monomial, Polynomial, Term};

/// `g = border − tail`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrebasisElement {
    pub border: Term,
    pub tail: Polynomial,
}

impl PrebasisElement {
    pub fn polynomial(&self) -> Polynomial {
        &self.border.to_poly() - &self.tail
    }

    /// Whether the border term sits on a monomial of the order ideal.
    pub fn is_scalar(&self, oi: &OrderIdeal) -> bool {
        oi.contains_monomial(&self.border.monomial)
    }
}

/// A validated `O`-border prebasis, elements kept in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderPrebasis {
    order_ideal: OrderIdeal,
    elements: Vec<PrebasisElement>,
}

impl BorderPrebasis {
    /// Splits each polynomial into its border term and tail, then validates.
    pub fn from_polynomials(oi: OrderIdeal, polys: &[Polynomial]) -> Result<Self> {
        let pairs = polys
            .iter()
            .enumerate()
            .map(|(i, g)| split_element(&oi, i, g))
            .collect::<Result<Vec<_>>>()?;
        BorderPrebasis::new(oi, pairs)
    }

    pub fn new(oi: OrderIdeal, elements: Vec<PrebasisElement>) -> Result<Self> {
        let n = oi.nvars();
        let mut scalar_elems: BTreeMap<Monomial, Vec<BigInt>> = BTreeMap::new();
        let mut monomial_elems: BTreeMap<Monomial, usize> = BTreeMap::new();
        let dborder = oi.monomial_border();

        for (i, e) in elements.iter().enumerate() {
            for a in [e.border.monomial.arity(), e.tail.arity()] {
                if a != n {
                    return Err(Error::ArityMismatch { expected: n, found: a });
                }
            }
            let b = &e.border;
            if oi.contains_monomial(&b.monomial) {
                let ideal = oi.ideal_at(&b.monomial);
                if b.coeff.is_zero() || !ideal.is_torsion() || !ideal.contains(&b.coeff) {
                    return Err(Error::NotABorderTerm {
                        element: i,
                        term: b.clone(),
                    });
                }
                scalar_elems
                    .entry(b.monomial.clone())
                    .or_default()
                    .push(b.coeff.clone());
            } else {
                if !dborder.contains(&b.monomial) || !b.coeff.is_one() {
                    return Err(Error::NotABorderTerm {
                        element: i,
                        term: b.clone(),
                    });
                }
                if monomial_elems.insert(b.monomial.clone(), i).is_some() {
                    return Err(Error::DuplicateBorderElement(b.clone()));
                }
            }
            for (m, c) in e.tail.iter() {
                if *m == b.monomial {
                    return Err(Error::SelfMonomialInTail {
                        element: i,
                        monomial: m.clone(),
                    });
                }
                if !oi.contains_term(c, m) {
                    return Err(Error::TailNotInOrderIdeal {
                        element: i,
                        term: Term::new(c.clone(), m.clone()),
                    });
                }
            }
        }

        for m in &dborder {
            if !monomial_elems.contains_key(m) {
                return Err(Error::MissingBorderElement(Term::new(BigInt::one(), m.clone())));
            }
        }
        for t in oi.scalar_border() {
            let Some(coeffs) = scalar_elems.get(&t.monomial) else {
                return Err(Error::MissingBorderElement(t));
            };
            for (k, c) in coeffs.iter().enumerate() {
                if coeffs[..k].contains(c) {
                    return Err(Error::DuplicateBorderElement(Term::new(
                        c.clone(),
                        t.monomial.clone(),
                    )));
                }
            }
            let ok = if coeffs.len() == 1 {
                coeffs[0] == t.coeff
            } else {
                CoefIdeal::from_generators(coeffs.iter()).generator() == &t.coeff
            };
            if !ok {
                return Err(Error::ScalarBorderMismatch {
                    monomial: t.monomial.clone(),
                });
            }
        }

        Ok(BorderPrebasis {
            order_ideal: oi,
            elements,
        })
    }

    pub fn order_ideal(&self) -> &OrderIdeal {
        &self.order_ideal
    }

    pub fn elements(&self) -> &[PrebasisElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.order_ideal.nvars()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements.iter().map(PrebasisElement::polynomial).collect()
    }

    /// Indices of the elements whose border term lies on `Mon(O)`.
    pub fn scalar_indices(&self) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| self.elements[i].is_scalar(&self.order_ideal))
            .collect()
    }

    pub fn monomial_indices(&self) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| !self.elements[i].is_scalar(&self.order_ideal))
            .collect()
    }
}

/// Locates the border term of `g`: its only term outside `Mon(O)` if
/// there is one, otherwise its only term on `Mon(O)` whose coefficient
/// lies in the coefficient ideal there.
fn split_element(oi: &OrderIdeal, i: usize, g: &Polynomial) -> Result<PrebasisElement> {
    if g.arity() != oi.nvars() {
        return Err(Error::ArityMismatch {
            expected: oi.nvars(),
            found: g.arity(),
        });
    }
    let outside: Vec<Term> = g
        .terms()
        .filter(|t| !oi.contains_monomial(&t.monomial))
        .collect();
    let border = match outside.as_slice() {
        [t] => t.clone(),
        [_, second, ..] => {
            return Err(Error::TailNotInOrderIdeal {
                element: i,
                term: second.clone(),
            })
        }
        [] => {
            let inside: Vec<Term> = g
                .terms()
                .filter(|t| oi.ideal_at(&t.monomial).contains(&t.coeff))
                .collect();
            match inside.as_slice() {
                [t] => t.clone(),
                [] => return Err(Error::NoBorderTerm { element: i }),
                [_, second, ..] => {
                    return Err(Error::TailNotInOrderIdeal {
                        element: i,
                        term: second.clone(),
                    })
                }
            }
        }
    };
    let tail = -&g.filter_terms(|m, _| *m != border.monomial);
    Ok(PrebasisElement { border, tail })
}
