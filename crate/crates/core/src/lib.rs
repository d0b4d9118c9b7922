//! First-order unification over lists of equations between simple types
//! (type variables and arrows), with substitutions represented as finite
//! maps and composed by key-wise merge.
//!
//! ```
//! use mgu::frontend::{parse_constraints, print_subst};
//! use mgu::unify::unify;
//!
//! let c = parse_constraints("a = b\nb = c -> c").unwrap();
//! let s = unify(&c).into_success().unwrap();
//! assert_eq!(print_subst(&s), "{a |-> c -> c, b |-> c -> c}");
//! ```

pub mod axioms;
pub mod constraint;
pub mod frontend;
pub mod substitution;
pub mod term;
pub mod termination;
pub mod unify;

pub use constraint::{Constraint, ConstraintList};
pub use substitution::Substitution;
pub use term::{TypeTerm, TypeVar};
pub use unify::{unify, unify_traced, MeasureTriple, TraceEvent, UnifyOutcome};
