//! Strong Gröbner bases over ℤ.
//!
//! Buchberger's algorithm with S- and G-polynomials, the short reduced form
//! (one element per leading monomial, leading coefficient the gcd generator,
//! tails with canonical coefficients), leading-coefficient ideals and the
//! finiteness/freeness analysis of the residue class module built on them.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::{bezout, bezout_many, CoefIdeal};
use crate::error::{Error, Result};
use crate::order_ideal::CoefficientIdealMapping;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Term};

/// `c·(L/Lm(f))·f − c'·(L/Lm(g))·g` with `L = lcm(Lm f, Lm g)` and
/// the multipliers chosen so the leading terms cancel against `lcm(Lc f, Lc g)`.
pub fn s_polynomial(ord: &MonomialOrder, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let lf = f.leading_term(ord)?;
    let lg = g.leading_term(ord)?;
    let l = lf.monomial.lcm(&lg.monomial);
    let c = lf.coeff.lcm(&lg.coeff);
    let mf = lf.monomial.quotient_of(&l).expect("lcm is a multiple");
    let mg = lg.monomial.quotient_of(&l).expect("lcm is a multiple");
    let mut out = f.mul_term(&(&c / &lf.coeff), &mf);
    out.add_scaled(&-(&c / &lg.coeff), &mg, g);
    Ok(out)
}

/// `u·(L/Lm f)·f + v·(L/Lm g)·g` where `u·Lc f + v·Lc g = gcd`; its leading
/// term is `gcd(Lc f, Lc g)·L`.
pub fn g_polynomial(ord: &MonomialOrder, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let lf = f.leading_term(ord)?;
    let lg = g.leading_term(ord)?;
    let l = lf.monomial.lcm(&lg.monomial);
    let (_, u, v) = bezout(&lf.coeff, &lg.coeff);
    let mf = lf.monomial.quotient_of(&l).expect("lcm is a multiple");
    let mg = lg.monomial.quotient_of(&l).expect("lcm is a multiple");
    let mut out = f.mul_term(&u, &mf);
    out.add_scaled(&v, &mg, g);
    Ok(out)
}

/// Full reduction of `f` modulo `basis` with canonical coefficients.
///
/// The ≺-largest unprocessed term `a·x^γ` is rewritten so that its
/// coefficient becomes the least non-negative residue of `a` modulo the
/// ideal generated by the leading coefficients of all basis elements whose
/// leading monomial divides `x^γ`. The witness is a Bezout combination of
/// those elements (a single element when one carries the gcd itself).
pub fn reduce(ord: &MonomialOrder, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let leads: Vec<(Term, &Polynomial)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.leading_term(ord).expect("nonzero"), g))
        .collect();
    let mut h = f.clone();
    let mut rem = Polynomial::zero(f.arity());
    while let Ok(t) = h.leading_term(ord) {
        let divs: Vec<&(Term, &Polynomial)> = leads
            .iter()
            .filter(|(lt, _)| lt.monomial.divides(&t.monomial))
            .collect();
        if !divs.is_empty() {
            let lcs: Vec<BigInt> = divs.iter().map(|(lt, _)| lt.coeff.clone()).collect();
            let (d, us) = bezout_many(&lcs);
            let r = t.coeff.mod_floor(&d);
            let q: BigInt = (&t.coeff - &r) / &d;
            if !q.is_zero() {
                if let Some((lt, g)) = divs.iter().find(|(lt, _)| lt.coeff.abs() == d) {
                    let mult = lt.monomial.quotient_of(&t.monomial).expect("divides");
                    h.add_scaled(&-(&q * &d / &lt.coeff), &mult, g);
                } else {
                    for ((lt, g), u) in divs.iter().zip(&us) {
                        let mult = lt.monomial.quotient_of(&t.monomial).expect("divides");
                        h.add_scaled(&-(&q * u), &mult, g);
                    }
                }
            }
            debug_assert_eq!(h.coeff(&t.monomial), r);
        }
        let c = h.coeff(&t.monomial);
        rem.add_term(&c, &t.monomial);
        h.add_term(&-c, &t.monomial);
    }
    rem
}

/// Euclidean reduction used inside Buchberger: a term is rewritten by the
/// single divisor with the smallest leading coefficient in absolute value.
fn reduce_euclidean(ord: &MonomialOrder, f: &Polynomial, basis: &[(Term, Polynomial)]) -> Polynomial {
    let mut h = f.clone();
    let mut rem = Polynomial::zero(f.arity());
    while let Ok(t) = h.leading_term(ord) {
        let best = basis
            .iter()
            .filter(|(lt, _)| lt.monomial.divides(&t.monomial))
            .min_by(|a, b| a.0.coeff.abs().cmp(&b.0.coeff.abs()));
        if let Some((lt, g)) = best {
            let r = t.coeff.mod_floor(&lt.coeff.abs());
            let q: BigInt = (&t.coeff - &r) / &lt.coeff;
            if !q.is_zero() {
                let mult = lt.monomial.quotient_of(&t.monomial).expect("divides");
                h.add_scaled(&-q, &mult, g);
            }
        }
        let c = h.coeff(&t.monomial);
        rem.add_term(&c, &t.monomial);
        h.add_term(&-c, &t.monomial);
    }
    rem
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
    order: MonomialOrder,
    short_reduced: bool,
}

/// Strong Gröbner basis of `⟨gens⟩`.
///
/// Pairs are processed smallest-lcm first (ties by index); every pair
/// contributes its S-polynomial and, when neither leading coefficient
/// divides the other, its G-polynomial.
pub fn buchberger(ord: &MonomialOrder, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        if g.arity() != ord.arity() {
            return Err(Error::ArityMismatch {
                expected: ord.arity(),
                found: g.arity(),
            });
        }
    }
    let mut basis: Vec<(Term, Polynomial)> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        basis.push((g.leading_term(ord)?, g.clone()));
    }
    if basis.is_empty() {
        return Err(Error::AllZeroGenerators);
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        let pos = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = basis[a.0].0.monomial.lcm(&basis[a.1].0.monomial);
                let lb = basis[b.0].0.monomial.lcm(&basis[b.1].0.monomial);
                ord.compare(&la, &lb).then(a.cmp(b))
            })
            .map(|(k, _)| k)
            .expect("nonempty");
        let (i, j) = pairs.remove(pos);
        let (fi, gj) = (&basis[i].1, &basis[j].1);
        let (ci, cj) = (&basis[i].0.coeff, &basis[j].0.coeff);

        let mut candidates = vec![s_polynomial(ord, fi, gj)?];
        if !ci.is_multiple_of(cj) && !cj.is_multiple_of(ci) {
            candidates.push(g_polynomial(ord, fi, gj)?);
        }
        for cand in candidates {
            let r = reduce_euclidean(ord, &cand, &basis);
            if !r.is_zero() {
                let k = basis.len();
                basis.push((r.leading_term(ord)?, r));
                pairs.extend((0..k).map(|i| (i, k)));
            }
        }
    }

    Ok(GroebnerBasis {
        generators: gens.to_vec(),
        basis: basis.into_iter().map(|(_, g)| g).collect(),
        order: ord.clone(),
        short_reduced: false,
    })
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_short_reduced(&self) -> bool {
        self.short_reduced
    }

    pub fn nvars(&self) -> usize {
        self.order.arity()
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.basis
            .iter()
            .map(|g| g.leading_term(&self.order).expect("basis elements are nonzero"))
            .collect()
    }

    /// Canonical remainder of `f` modulo the basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce(&self.order, f, &self.basis)
    }

    /// Ideal generated by `Lc(g)` over basis elements with `Lm(g) | m`.
    pub fn leading_coefficient_ideal(&self, m: &Monomial) -> CoefIdeal {
        let lts = self.leading_terms();
        CoefIdeal::from_generators(
            lts.iter()
                .filter(|t| t.monomial.divides(m))
                .map(|t| &t.coeff),
        )
    }

    /// Same as [`leading_coefficient_ideal`](Self::leading_coefficient_ideal)
    /// restricted to leading monomials that properly divide `m`.
    pub fn lower_coefficient_ideal(&self, m: &Monomial) -> CoefIdeal {
        let lts = self.leading_terms();
        CoefIdeal::from_generators(
            lts.iter()
                .filter(|t| t.monomial != *m && t.monomial.divides(m))
                .map(|t| &t.coeff),
        )
    }

    pub fn short_reduce(&self) -> GroebnerBasis {
        let ord = &self.order;
        let lts = self.leading_terms();
        let lms: BTreeSet<Monomial> = lts.iter().map(|t| t.monomial.clone()).collect();
        let mut out = Vec::new();
        for alpha in lms {
            let full = self.leading_coefficient_ideal(&alpha);
            let lower = self.lower_coefficient_ideal(&alpha);
            if full == lower {
                continue;
            }
            // witness h ∈ 𝔞 with Lt(h) = gen·x^α
            let divs: Vec<usize> = (0..lts.len())
                .filter(|&i| lts[i].monomial.divides(&alpha))
                .collect();
            let lcs: Vec<BigInt> = divs.iter().map(|&i| lts[i].coeff.clone()).collect();
            let (d, us) = bezout_many(&lcs);
            let mut h = Polynomial::zero(self.nvars());
            for (&i, u) in divs.iter().zip(&us) {
                let mult = lts[i].monomial.quotient_of(&alpha).expect("divides");
                h.add_scaled(u, &mult, &self.basis[i]);
            }
            debug_assert_eq!(h.leading_term(ord).ok(), Some(Term::new(d.clone(), alpha.clone())));
            let lead = Polynomial::from_term(d, alpha);
            let tail = reduce(ord, &(&lead - &h), &self.basis);
            out.push(&lead - &tail);
        }
        out.sort_by(|a, b| {
            ord.compare(
                &a.leading_monomial(ord).expect("nonzero"),
                &b.leading_monomial(ord).expect("nonzero"),
            )
        });
        GroebnerBasis {
            generators: self.generators.clone(),
            basis: out,
            order: self.order.clone(),
            short_reduced: true,
        }
    }

    fn short_reduced_view(&self) -> std::borrow::Cow<'_, GroebnerBasis> {
        if self.short_reduced {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.short_reduce())
        }
    }

    /// Per variable, the least `ν` with a monic `x_i^ν` among the leading
    /// terms of the short reduced basis (`0` when the ideal is the unit ideal).
    fn monic_pure_power_bounds(&self) -> Vec<Option<u32>> {
        let sr = self.short_reduced_view();
        let mut bounds = vec![None; self.nvars()];
        for t in sr.leading_terms() {
            if !t.coeff.is_one() {
                continue;
            }
            if t.monomial.is_one() {
                return vec![Some(0); self.nvars()];
            }
            if let Some(i) = t.monomial.pure_power_var() {
                let e = t.monomial.exponents()[i];
                bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
            }
        }
        bounds
    }

    /// Whether the residue class ring is a finitely generated ℤ-module:
    /// every variable has a monic pure power among the leading terms.
    pub fn is_residue_fg(&self) -> bool {
        self.monic_pure_power_bounds().iter().all(Option::is_some)
    }

    pub fn is_free_representation(&self) -> bool {
        let sr = self.short_reduced_view();
        sr.leading_terms().iter().all(|t| t.coeff.is_one())
    }

    /// `{ m : leading_coefficient_ideal(m) ≠ ⟨1⟩ }`.
    pub fn weak_standard_monomials(&self) -> Result<BTreeSet<Monomial>> {
        let bounds: Vec<u32> = self
            .monic_pure_power_bounds()
            .into_iter()
            .collect::<Option<_>>()
            .ok_or(Error::NotFinitelyGenerated)?;
        let mut out = BTreeSet::new();
        if bounds.contains(&0) {
            return Ok(out);
        }
        let mut e = vec![0u32; bounds.len()];
        loop {
            let m = Monomial::new(e.clone());
            if !self.leading_coefficient_ideal(&m).is_unit() {
                out.insert(m);
            }
            // odometer over the box ∏ [0, ν_i)
            let mut k = 0;
            loop {
                if k == e.len() {
                    return Ok(out);
                }
                e[k] += 1;
                if e[k] < bounds[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }

    /// The coefficient ideal mapping `m ↦ leading_coefficient_ideal(m)`.
    pub fn coefficient_mapping(&self) -> GbCoefficientMapping {
        let support = self.weak_standard_monomials().ok().map(|ms| {
            CoefficientIdealMapping::from_support(
                self.nvars(),
                ms.into_iter()
                    .map(|m| {
                        let i = self.leading_coefficient_ideal(&m);
                        (m, i)
                    })
                    .collect(),
            )
        });
        GbCoefficientMapping {
            leads: self.leading_terms(),
            nvars: self.nvars(),
            support,
        }
    }

    pub fn analyze(&self) -> ResidueAnalysis {
        let finitely_generated = self.is_residue_fg();
        let free_representation = self.is_free_representation();
        let weak_std_monomials = self.weak_standard_monomials().ok();
        let ideals = match &weak_std_monomials {
            Some(ms) => ms
                .iter()
                .map(|m| (m.clone(), self.leading_coefficient_ideal(m)))
                .collect(),
            None => {
                // divisor hull of the leading monomials
                let hull: BTreeSet<Monomial> = self
                    .leading_terms()
                    .iter()
                    .flat_map(|t| t.monomial.divisors())
                    .collect();
                hull.into_iter()
                    .map(|m| {
                        let i = self.leading_coefficient_ideal(&m);
                        (m, i)
                    })
                    .collect()
            }
        };
        let unbounded_vars = self
            .monic_pure_power_bounds()
            .iter()
            .enumerate()
            .filter(|(_, b)| b.is_none())
            .map(|(i, _)| i)
            .collect();
        ResidueAnalysis {
            finitely_generated,
            free_representation,
            weak_std_monomials,
            ideals,
            unbounded_vars,
        }
    }
}

/// The intensional mapping `𝓘^(G)` of a Gröbner basis.
#[derive(Clone, Debug)]
pub struct GbCoefficientMapping {
    leads: Vec<Term>,
    nvars: usize,
    support: Option<CoefficientIdealMapping>,
}

impl GbCoefficientMapping {
    pub fn query(&self, m: &Monomial) -> CoefIdeal {
        CoefIdeal::from_generators(
            self.leads
                .iter()
                .filter(|t| t.monomial.divides(m))
                .map(|t| &t.coeff),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Proper iff only finitely many monomials map below `⟨1⟩`.
    pub fn is_proper(&self) -> bool {
        self.support.is_some()
    }

    pub fn support(&self) -> Option<&CoefficientIdealMapping> {
        self.support.as_ref()
    }

    pub fn into_support(self) -> Option<CoefficientIdealMapping> {
        self.support
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueAnalysis {
    pub finitely_generated: bool,
    pub free_representation: bool,
    pub weak_std_monomials: Option<BTreeSet<Monomial>>,
    pub ideals: BTreeMap<Monomial, CoefIdeal>,
    /// Variables without a monic pure power in the basis.
    pub unbounded_vars: Vec<usize>,
}
