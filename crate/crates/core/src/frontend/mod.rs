//! Text formats and the command-line front end.

pub mod cli;
pub mod json;
mod parse;
mod print;

pub use parse::{parse_constraints, parse_type, ParseError};
pub use print::{print_constraint, print_constraints, print_subst, print_trace, print_type};
