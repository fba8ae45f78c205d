use std::collections::BTreeSet;

use serde::Serialize;

use super::division::canonicalize;
use super::{border_divide_with_budget, default_step_budget, o_remainder, well_order, BorderPrebasis, PrebasisElement};
use crate::coeff::CoefIdeal;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::order_ideal::OrderIdeal;
use crate::poly::{MonomialOrder, Polynomial, Term};

/// The representative of `f` modulo `⟨P⟩` whose coefficients are all
/// canonical coset representatives.
pub fn normal_form(pb: &BorderPrebasis, f: &Polynomial) -> Result<Polynomial> {
    normal_form_with_budget(pb, f, default_step_budget(pb))
}

pub fn normal_form_with_budget(pb: &BorderPrebasis, f: &Polynomial, budget: u64) -> Result<Polynomial> {
    let order = well_order(pb)?;
    let rem = border_divide_with_budget(pb, f, budget)?.remainder;
    Ok(canonicalize(pb, &order, rem))
}

pub fn is_member(pb: &BorderPrebasis, f: &Polynomial) -> Result<bool> {
    Ok(normal_form(pb, f)?.is_zero())
}

/// The acyclic border basis induced by a Gröbner basis: for each border
/// term `t`, the element `t − NF(t)`. Monomial border first, then scalar,
/// each ascending under the basis order.
pub fn border_basis_from_gb(gb: &GroebnerBasis) -> Result<(OrderIdeal, BorderPrebasis)> {
    let mapping = gb
        .coefficient_mapping()
        .into_support()
        .ok_or(Error::NotFinitelyGenerated)?;
    let oi = OrderIdeal::new(mapping);
    let ord = gb.order();
    let border = oi.borders();
    let mut mono: Vec<Term> = border
        .monomial
        .iter()
        .map(|m| Term::new(1.into(), m.clone()))
        .collect();
    mono.sort_by(|a, b| ord.compare(&a.monomial, &b.monomial));
    let mut scalar = border.scalar.clone();
    scalar.sort_by(|a, b| ord.compare(&a.monomial, &b.monomial));
    let elements = mono
        .into_iter()
        .chain(scalar)
        .map(|t| PrebasisElement {
            tail: gb.reduce(&t.to_poly()),
            border: t,
        })
        .collect();
    let pb = BorderPrebasis::new(oi.clone(), elements)?;
    debug_assert!(well_order(&pb).is_ok());
    Ok((oi, pb))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// `None` when the check could not be carried out.
    pub passed: Option<bool>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub verdict: Verdict,
    pub checks: Vec<CheckOutcome>,
    pub inducing_order: Option<MonomialOrder>,
}

/// Whether `c·x^γ` lies in the term ideal generated by the border terms.
fn in_border_term_ideal(oi: &OrderIdeal, t: &Term) -> bool {
    let mut gens = Vec::new();
    for b in oi.borders().terms() {
        if b.monomial.divides(&t.monomial) {
            gens.push(b.coeff);
        }
    }
    CoefIdeal::from_generators(gens.iter()).contains(&t.coeff)
}

/// Checks that `P` is the acyclic border basis of `⟨ideal_gens⟩`.
///
/// V1 `P ⊆ 𝔞`, V2 `𝔞 ⊆ ⟨P⟩` and V3 (border forms of a Gröbner basis lie in
/// the border term ideal) are necessary. V4 searches for a monomial order
/// inducing `O` and compares `P` with the basis it determines.
pub fn verify_border_basis(
    pb: &BorderPrebasis,
    ideal_gens: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<Verification> {
    well_order(pb)?;
    let oi = pb.order_ideal();
    let gb = buchberger(ord, ideal_gens)?;
    let mut checks = Vec::new();

    let v1 = pb
        .polynomials()
        .iter()
        .position(|g| !gb.reduce(g).is_zero());
    checks.push(CheckOutcome {
        name: "V1",
        passed: Some(v1.is_none()),
        detail: match v1 {
            None => "every prebasis element lies in the ideal".into(),
            Some(i) => format!("element {i} does not reduce to zero modulo the ideal"),
        },
    });

    let mut v2 = None;
    for (k, h) in gb.basis().iter().enumerate() {
        if !o_remainder(pb, h)?.is_zero() {
            v2 = Some(k);
            break;
        }
    }
    checks.push(CheckOutcome {
        name: "V2",
        passed: Some(v2.is_none()),
        detail: match v2 {
            None => "every Groebner basis element has remainder zero".into(),
            Some(k) => format!("Groebner basis element {k} has a nonzero remainder"),
        },
    });

    let mut v3 = None;
    'outer: for (k, h) in gb.basis().iter().enumerate() {
        for t in oi.border_form(h)?.terms() {
            if !in_border_term_ideal(oi, &t) {
                v3 = Some((k, t));
                break 'outer;
            }
        }
    }
    checks.push(CheckOutcome {
        name: "V3",
        passed: Some(v3.is_none()),
        detail: match &v3 {
            None => "border forms lie in the border term ideal".into(),
            Some((k, t)) => format!("border form of Groebner basis element {k} has term {t} outside the border term ideal"),
        },
    });

    let necessary_ok = v1.is_none() && v2.is_none() && v3.is_none();

    let multi_scalar = {
        let mons: Vec<_> = pb.scalar_indices().iter().map(|&i| &pb.elements()[i].border.monomial).collect();
        let set: BTreeSet<_> = mons.iter().collect();
        set.len() != mons.len()
    };
    let mut candidates = vec![ord.clone()];
    if oi.nvars() <= 4 {
        candidates.extend(MonomialOrder::all_for(oi.nvars()).into_iter().filter(|o| o != ord));
    }
    let mut inducing = None;
    for cand in candidates {
        let g = if cand == *ord { gb.clone() } else { buchberger(&cand, ideal_gens)? };
        if g.coefficient_mapping().support() == Some(oi.mapping()) {
            inducing = Some((cand, g));
            break;
        }
    }
    let (v4, inducing_order) = match (&inducing, multi_scalar) {
        (_, true) => (
            CheckOutcome {
                name: "V4",
                passed: None,
                detail: "prebasis uses several generators for a scalar border monomial".into(),
            },
            None,
        ),
        (None, false) => (
            CheckOutcome {
                name: "V4",
                passed: None,
                detail: "no attempted monomial order induces the order ideal".into(),
            },
            None,
        ),
        (Some((o, g)), false) => {
            let (_, reference) = border_basis_from_gb(g)?;
            let mine: BTreeSet<Polynomial> = pb.polynomials().into_iter().collect();
            let theirs: BTreeSet<Polynomial> = reference.polynomials().into_iter().collect();
            let same = mine == theirs;
            (
                CheckOutcome {
                    name: "V4",
                    passed: Some(same),
                    detail: if same {
                        "prebasis equals the border basis induced by the order".into()
                    } else {
                        "prebasis differs from the border basis induced by the order".into()
                    },
                },
                Some(o.clone()),
            )
        }
    };
    let verdict = match (necessary_ok, v4.passed) {
        (false, _) | (true, Some(false)) => Verdict::Refuted,
        (true, Some(true)) => Verdict::Verified,
        (true, None) => Verdict::Inconclusive,
    };
    checks.push(v4);
    Ok(Verification {
        verdict,
        checks,
        inducing_order,
    })
}

/// Whether the short reduced Gröbner basis consists exactly of the border
/// basis elements whose border term `c·x^α` has `c ∉ ⟨Lc(<α)⟩`.
pub fn pauer_subset_check(gb: &GroebnerBasis, pb: &BorderPrebasis) -> Result<bool> {
    let induced = gb.coefficient_mapping();
    if induced.support() != Some(pb.order_ideal().mapping()) {
        return Err(Error::Precondition(
            "prebasis order ideal is not the one induced by the Groebner basis".into(),
        ));
    }
    let reduced: BTreeSet<Polynomial> = pb
        .elements()
        .iter()
        .filter(|e| !gb.lower_coefficient_ideal(&e.border.monomial).contains(&e.border.coeff))
        .map(PrebasisElement::polynomial)
        .collect();
    let short: BTreeSet<Polynomial> = gb.short_reduce().basis().iter().cloned().collect();
    Ok(reduced == short)
}
