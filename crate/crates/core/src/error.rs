use thiserror::Error;

use crate::poly::{Monomial, Term};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("generating set is empty or all zero")]
    AllZeroGenerators,

    #[error("mapping is not monotone: {smaller} divides {larger} but its ideal is not contained")]
    NotMonotone { smaller: Monomial, larger: Monomial },

    #[error("monomial {0} listed twice in mapping")]
    DuplicateMonomial(Monomial),

    #[error("residue class ring is not finitely generated")]
    NotFinitelyGenerated,

    #[error("no prebasis element for border term {0}")]
    MissingBorderElement(Term),

    #[error("border term {0} has more than one prebasis element")]
    DuplicateBorderElement(Term),

    #[error("element {element}: no border term found")]
    NoBorderTerm { element: usize },

    #[error("element {element}: term {term} is not a border term")]
    NotABorderTerm { element: usize, term: Term },

    #[error("element {element}: tail term {term} does not lie in the order ideal")]
    TailNotInOrderIdeal { element: usize, term: Term },

    #[error("element {element}: tail contains the border monomial {monomial}")]
    SelfMonomialInTail { element: usize, monomial: Monomial },

    #[error("scalar border generators at {monomial} do not generate its coefficient ideal")]
    ScalarBorderMismatch { monomial: Monomial },

    #[error("prebasis is not acyclic (cycle through {})", fmt_cycle(.cycle))]
    NotAcyclic { cycle: Vec<Monomial> },

    #[error("scalar-border elimination exceeded its step budget of {budget}")]
    StepBudgetExceeded { budget: u64 },

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("exponent overflow at byte {position}")]
    ExponentOverflow { position: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

fn fmt_cycle(cycle: &[Monomial]) -> String {
    cycle
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(" -> ")
}
