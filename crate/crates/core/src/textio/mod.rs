//! Polynomial syntax and problem files.

mod format;
mod parse;
mod problem;

pub use format::{format_monomial, format_poly, format_term};
pub use parse::{parse_integer, parse_monomial, parse_poly};
pub use problem::{IntLiteral, MappingEntry, OrderSpec, Problem, ProblemError, ProblemFile};
