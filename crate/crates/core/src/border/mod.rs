//! Border prebases, acyclicity, the border division algorithm and acyclic
//! border bases.

mod acyclic;
mod basis;
mod division;
mod prebasis;

#[cfg(test)]
pub(crate) mod fixtures;

pub use acyclic::{acyclicity, well_order, AcyclicityReport};
pub use basis::{
    border_basis_from_gb, is_member, normal_form, normal_form_with_budget, pauer_subset_check, verify_border_basis,
    CheckOutcome, Verdict, Verification,
};
pub use division::{
    border_divide, border_divide_with_budget, default_step_budget, o_remainder, DivisionResult,
    DivisionStep,
};
pub use prebasis::{BorderPrebasis, PrebasisElement};
