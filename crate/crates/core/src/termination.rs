//! How each component of the termination triple moves on a recursive call,
//! one row per head-constraint shape and side condition.
//!
//! | head            | condition                    | vars | arrows | len |
//! |-----------------|------------------------------|------|--------|-----|
//! | `α ≐ α`         | `α ∈ FVC(C)`                 |  -   |   -    |  ↓  |
//! | `α ≐ α`         | `α ∉ FVC(C)`                 |  ↓   |   -    |  ↓  |
//! | `α ≐ β`         | `α ≠ β`                      |  ↓   |   -    |  ↓  |
//! | `α ≐ τ`/`τ ≐ α` | `α ∉ FTV(τ)`, `α ∉ FVC(C)`   |  ↓   |   ↓    |  ↓  |
//! | `α ≐ τ`/`τ ≐ α` | `α ∉ FTV(τ)`, `α ∈ FVC(C)`   |  ↓   |   ↑    |  ↓  |
//! | `τ1→τ2 ≐ τ3→τ4` | none                         |  -   |   ↓    |  ↑  |
//!
//! The arrow column's `↑` on the var/term rows is not strict: replacing
//! each occurrence of `α` in `C` by `τ` adds `|τ|→ · occ(α, C)` arrows and
//! removing the head drops `|τ|→`, so the count is unchanged when `α`
//! occurs exactly once in `C`. It is modelled as [`Movement::NonDecreasing`].

use crate::constraint::{Constraint, ConstraintList};
use crate::term::TypeTerm;
use crate::unify::MeasureTriple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableRow {
    DeleteVarInTail,
    DeleteVarNotInTail,
    VarVar,
    VarTermFresh,
    VarTermInTail,
    TermVarFresh,
    TermVarInTail,
    Decompose,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Movement {
    Decreases,
    Unchanged,
    Increases,
    NonDecreasing,
}

impl Movement {
    pub fn admits(self, before: usize, after: usize) -> bool {
        match self {
            Movement::Decreases => after < before,
            Movement::Unchanged => after == before,
            Movement::Increases => after > before,
            Movement::NonDecreasing => after >= before,
        }
    }
}

impl TableRow {
    pub const ALL: [TableRow; 8] = [
        TableRow::DeleteVarInTail,
        TableRow::DeleteVarNotInTail,
        TableRow::VarVar,
        TableRow::VarTermFresh,
        TableRow::VarTermInTail,
        TableRow::TermVarFresh,
        TableRow::TermVarInTail,
        TableRow::Decompose,
    ];

    /// Expected movement of `[vars, arrows, len]`.
    pub fn movements(self) -> [Movement; 3] {
        use Movement::*;
        match self {
            TableRow::DeleteVarInTail => [Unchanged, Unchanged, Decreases],
            TableRow::DeleteVarNotInTail => [Decreases, Unchanged, Decreases],
            TableRow::VarVar => [Decreases, Unchanged, Decreases],
            TableRow::VarTermFresh | TableRow::TermVarFresh => [Decreases, Decreases, Decreases],
            TableRow::VarTermInTail | TableRow::TermVarInTail => {
                [Decreases, NonDecreasing, Decreases]
            }
            TableRow::Decompose => [Unchanged, Decreases, Increases],
        }
    }

    pub fn admits(self, before: MeasureTriple, after: MeasureTriple) -> bool {
        self.movements()
            .iter()
            .zip(before.as_array().into_iter().zip(after.as_array()))
            .all(|(m, (b, a))| m.admits(b, a))
    }
}

/// Picks the row for a head constraint and the rest of the list, from the
/// shape of the head and the side conditions alone. Heads that fail the
/// occurs check have no row.
pub fn classify(head: &Constraint, tail: &ConstraintList) -> Option<TableRow> {
    let in_tail = |v| tail.iter().any(|k| k.lhs.occurs(v) || k.rhs.occurs(v));
    match (&head.lhs, &head.rhs) {
        (TypeTerm::Var(a), TypeTerm::Var(b)) if a == b => Some(if in_tail(a) {
            TableRow::DeleteVarInTail
        } else {
            TableRow::DeleteVarNotInTail
        }),
        (TypeTerm::Var(_), TypeTerm::Var(_)) => Some(TableRow::VarVar),
        (TypeTerm::Var(a), t @ TypeTerm::Arrow(..)) => {
            if t.occurs(a) {
                None
            } else if in_tail(a) {
                Some(TableRow::VarTermInTail)
            } else {
                Some(TableRow::VarTermFresh)
            }
        }
        (t @ TypeTerm::Arrow(..), TypeTerm::Var(a)) => {
            if t.occurs(a) {
                None
            } else if in_tail(a) {
                Some(TableRow::TermVarInTail)
            } else {
                Some(TableRow::TermVarFresh)
            }
        }
        (TypeTerm::Arrow(..), TypeTerm::Arrow(..)) => Some(TableRow::Decompose),
    }
}
