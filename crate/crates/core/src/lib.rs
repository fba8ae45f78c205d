//! Gröbner bases over ℤ and acyclic border bases for residue class rings
//! `ℤ[x_1, …, x_n]/𝔞` whose additive group may have torsion.

pub mod coeff;
pub mod error;
pub mod groebner;
pub mod order_ideal;
pub mod border;
pub mod poly;
pub mod textio;

pub use coeff::{bezout, bezout_many, CoefIdeal, CosetRep};
pub use error::{Error, Result};
pub use groebner::{buchberger, GroebnerBasis, ResidueAnalysis};
pub use order_ideal::{Border, CoefficientIdealMapping, OrderIdeal};
pub use poly::{Monomial, MonomialOrder, OrderKind, Polynomial, Term};
pub use border::{
    acyclicity, border_basis_from_gb, border_divide, is_member, normal_form, o_remainder,
    pauer_subset_check, verify_border_basis, BorderPrebasis, DivisionResult, PrebasisElement,
    Verdict,
};
pub use textio::{format_poly, parse_poly, Problem, ProblemFile};
