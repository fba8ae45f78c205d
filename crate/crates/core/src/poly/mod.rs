//! Sparse multivariate polynomials over ℤ and monomial orders.

mod monomial;
mod order;
mod polynomial;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use polynomial::{Polynomial, Term};
