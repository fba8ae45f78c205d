//! Prebases shared by the unit tests.

use num_bigint::BigInt;

use super::BorderPrebasis;
use crate::order_ideal::{CoefficientIdealMapping, OrderIdeal};
use crate::poly::{Monomial, MonomialOrder, OrderKind, Polynomial};

pub fn m(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

pub fn p(t: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_i64(2, t)
}

fn oi(entries: &[(&[u32], i64)]) -> OrderIdeal {
    let raw: Vec<_> = entries
        .iter()
        .map(|(e, g)| (m(e), vec![BigInt::from(*g)]))
        .collect();
    OrderIdeal::new(CoefficientIdealMapping::validate(2, &raw).unwrap())
}

pub fn lex_x_below_y() -> MonomialOrder {
    MonomialOrder::new(OrderKind::Lex, vec![1, 0]).unwrap()
}

pub fn lex_gens() -> Vec<Polynomial> {
    vec![
        p(&[(3, &[1, 0])]),
        p(&[(4, &[0, 1]), (2, &[1, 0])]),
        p(&[(1, &[2, 0])]),
        p(&[(1, &[0, 2])]),
    ]
}

/// `{1 ↦ ⟨0⟩, x ↦ ⟨4⟩, y ↦ ⟨3⟩, x² ↦ ⟨2⟩}`.
pub fn torsion_oi() -> OrderIdeal {
    oi(&[(&[0, 0], 0), (&[1, 0], 4), (&[0, 1], 3), (&[2, 0], 2)])
}

pub fn g_prime() -> Vec<Polynomial> {
    vec![
        p(&[(1, &[1, 1]), (-1, &[1, 0])]),
        p(&[(1, &[0, 2]), (-1, &[0, 1])]),
        p(&[(1, &[3, 0]), (-1, &[2, 0]), (6, &[0, 0])]),
        p(&[(1, &[2, 1]), (-1, &[0, 1]), (5, &[0, 0])]),
        p(&[(4, &[1, 0]), (-7, &[0, 0])]),
        p(&[(3, &[0, 1]), (-1, &[1, 0])]),
        p(&[(2, &[2, 0]), (-2, &[0, 1]), (-3, &[1, 0])]),
    ]
}

pub fn acyclic_prebasis() -> BorderPrebasis {
    BorderPrebasis::from_polynomials(torsion_oi(), &g_prime()).unwrap()
}

pub fn cyclic_prebasis() -> BorderPrebasis {
    let g = vec![
        p(&[(1, &[1, 1]), (-1, &[1, 0])]),
        p(&[(1, &[0, 2]), (-1, &[0, 1])]),
        p(&[(1, &[3, 0]), (-2, &[0, 1])]),
        p(&[(1, &[2, 1]), (-1, &[2, 0]), (10, &[0, 0])]),
        p(&[(4, &[1, 0]), (-2, &[0, 1])]),
        p(&[(3, &[0, 1]), (-3, &[1, 0])]),
        p(&[(2, &[2, 0]), (-1, &[1, 0]), (5, &[0, 0])]),
    ];
    BorderPrebasis::from_polynomials(torsion_oi(), &g).unwrap()
}

pub fn worked_order() -> MonomialOrder {
    MonomialOrder::natural(OrderKind::DegLex, 2)
}

pub fn worked_oi() -> OrderIdeal {
    oi(&[
        (&[0, 0], 0),
        (&[1, 0], 0),
        (&[0, 1], 0),
        (&[1, 1], 0),
        (&[0, 2], 0),
        (&[2, 0], 2),
        (&[2, 1], 2),
    ])
}

pub fn worked_gens() -> Vec<Polynomial> {
    vec![
        p(&[(1, &[3, 0]), (-1, &[1, 0])]),
        p(&[(1, &[0, 3]), (-1, &[0, 1])]),
        p(&[(1, &[1, 2]), (-1, &[1, 1])]),
        p(&[(1, &[2, 2]), (-1, &[2, 1])]),
        p(&[(1, &[3, 1]), (-1, &[1, 1])]),
        p(&[(2, &[2, 1]), (-1, &[0, 2]), (-1, &[0, 1])]),
        p(&[(2, &[2, 0]), (2, &[1, 1]), (-1, &[0, 2]), (-2, &[1, 0]), (-1, &[0, 1])]),
    ]
}

pub fn worked() -> BorderPrebasis {
    BorderPrebasis::from_polynomials(worked_oi(), &worked_gens()).unwrap()
}

/// `x⁴ + 2x³y² + x² + 4xy + 15`
pub fn worked_f() -> Polynomial {
    p(&[(1, &[4, 0]), (2, &[3, 2]), (1, &[2, 0]), (4, &[1, 1]), (15, &[0, 0])])
}
