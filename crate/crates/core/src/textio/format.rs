use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::poly::{Monomial, MonomialOrder, Polynomial, Term};

fn separator(vars: &[String]) -> &'static str {
    if vars.iter().any(|v| v.len() > 1) {
        "*"
    } else {
        ""
    }
}

/// `x^2y`, or `1` for the unit monomial.
pub fn format_monomial(vars: &[String], m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    let factors: Vec<String> = m
        .exponents()
        .iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    factors.join(separator(vars))
}

fn magnitude(vars: &[String], c: &BigInt, m: &Monomial) -> String {
    let c = c.abs();
    if m.is_one() {
        c.to_string()
    } else if c.is_one() {
        format_monomial(vars, m)
    } else {
        format!("{c}{}{}", separator(vars), format_monomial(vars, m))
    }
}

pub fn format_term(vars: &[String], t: &Term) -> String {
    let sign = if t.coeff.is_negative() { "-" } else { "" };
    format!("{sign}{}", magnitude(vars, &t.coeff, &t.monomial))
}

/// Terms in descending order, e.g. `4xy + y^2 + 2x + y + 15`.
pub fn format_poly(vars: &[String], ord: &MonomialOrder, f: &Polynomial) -> String {
    let terms = f.sorted_terms(ord);
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        let neg = t.coeff.is_negative();
        match (k, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&magnitude(vars, &t.coeff, &t.monomial));
    }
    out
}
