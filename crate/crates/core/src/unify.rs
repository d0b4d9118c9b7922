//! First-order unification over constraint lists.
//!
//! Five cases, tried in this order on the head constraint:
//!
//! 1. `[]` gives the empty substitution.
//! 2. `α ≐ β`: drop it when `α = β`, otherwise bind `α ↦ β`.
//! 3. `α ≐ τ` with `τ` an arrow: fail if `α` occurs in `τ`, otherwise bind `α ↦ τ`.
//! 4. `τ ≐ α`: symmetric to 3.
//! 5. `τ1 → τ2 ≐ τ3 → τ4`: replace by `τ1 ≐ τ3 :: τ2 ≐ τ4`.
//!
//! A binding `{α ↦ τ}` is applied eagerly to the rest of the list and the
//! result is `{α ↦ τ} ∘ unify(rest)`. The recursion is run as a loop that
//! records the emitted bindings, followed by a right fold of the
//! compositions, so deep inputs do not grow the call stack.

use std::collections::VecDeque;
use std::fmt;

use crate::constraint::{Constraint, ConstraintList};
use crate::substitution::Substitution;
use crate::term::{TypeTerm, TypeVar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnifyOutcome {
    Success(Substitution),
    Failure(UnifyFailure),
}

/// The only way unification can fail on variables and arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnifyFailure {
    OccursCheck { variable: TypeVar, term: TypeTerm },
}

impl UnifyOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, UnifyOutcome::Success(_))
    }

    pub fn success(&self) -> Option<&Substitution> {
        match self {
            UnifyOutcome::Success(s) => Some(s),
            UnifyOutcome::Failure(_) => None,
        }
    }

    pub fn into_success(self) -> Option<Substitution> {
        match self {
            UnifyOutcome::Success(s) => Some(s),
            UnifyOutcome::Failure(_) => None,
        }
    }
}

impl fmt::Display for UnifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnifyFailure::OccursCheck { variable, term } => {
                write!(
                    f,
                    "occurs-check: {} in {}",
                    variable,
                    crate::frontend::print_type(term)
                )
            }
        }
    }
}

/// `⟨unique free variables, arrows, length⟩`, ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MeasureTriple {
    pub uniq_vars: usize,
    pub arrows: usize,
    pub length: usize,
}

impl MeasureTriple {
    pub fn as_array(&self) -> [usize; 3] {
        [self.uniq_vars, self.arrows, self.length]
    }
}

impl fmt::Display for MeasureTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.uniq_vars, self.arrows, self.length)
    }
}

pub fn measure(c: &ConstraintList) -> MeasureTriple {
    MeasureTriple {
        uniq_vars: c.unique_ftv_count(),
        arrows: c.arrow_count(),
        length: c.len(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Delete,
    VarVar,
    VarTerm,
    TermVar,
    Decompose,
    EmptyDone,
    OccursFail,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Delete => "Delete",
            Rule::VarVar => "VarVar",
            Rule::VarTerm => "VarTerm",
            Rule::TermVar => "TermVar",
            Rule::Decompose => "Decompose",
            Rule::EmptyDone => "EmptyDone",
            Rule::OccursFail => "OccursFail",
        }
    }

    pub fn is_terminal(self) -> bool {
        matches!(self, Rule::EmptyDone | Rule::OccursFail)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One step of the algorithm. Terminal events have no `measure_after`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub rule: Rule,
    pub head: Option<Constraint>,
    pub measure_before: MeasureTriple,
    pub measure_after: Option<MeasureTriple>,
    pub binding: Option<(TypeVar, TypeTerm)>,
}

pub fn unify(c: &ConstraintList) -> UnifyOutcome {
    run(c, None)
}

pub fn unify_traced(c: &ConstraintList) -> (UnifyOutcome, Vec<TraceEvent>) {
    let mut trace = Vec::new();
    let outcome = run(c, Some(&mut trace));
    (outcome, trace)
}

fn measure_of(work: &VecDeque<Constraint>) -> MeasureTriple {
    let mut vars = std::collections::BTreeSet::new();
    let mut arrows = 0;
    for k in work {
        let mut ftv = Vec::new();
        k.lhs.collect_ftv(&mut ftv);
        k.rhs.collect_ftv(&mut ftv);
        vars.extend(ftv);
        arrows += k.arrow_count();
    }
    MeasureTriple {
        uniq_vars: vars.len(),
        arrows,
        length: work.len(),
    }
}

fn run(c: &ConstraintList, mut trace: Option<&mut Vec<TraceEvent>>) -> UnifyOutcome {
    let mut work: VecDeque<Constraint> = c.iter().cloned().collect();
    let mut bindings: Vec<Substitution> = Vec::new();

    loop {
        let before = trace.as_ref().map(|_| measure_of(&work));
        let Some(head) = work.pop_front() else {
            if let (Some(t), Some(before)) = (trace.as_deref_mut(), before) {
                t.push(TraceEvent {
                    rule: Rule::EmptyDone,
                    head: None,
                    measure_before: before,
                    measure_after: None,
                    binding: None,
                });
            }
            break;
        };

        let (rule, binding) = match (&head.lhs, &head.rhs) {
            (TypeTerm::Var(a), TypeTerm::Var(b)) if a == b => (Rule::Delete, None),
            (TypeTerm::Var(a), TypeTerm::Var(_)) => {
                (Rule::VarVar, Some((a.clone(), head.rhs.clone())))
            }
            (TypeTerm::Var(a), t @ TypeTerm::Arrow(..))
            | (t @ TypeTerm::Arrow(..), TypeTerm::Var(a)) => {
                let rule = if head.lhs.is_var() {
                    Rule::VarTerm
                } else {
                    Rule::TermVar
                };
                if t.occurs(a) {
                    if let (Some(tr), Some(before)) = (trace.as_deref_mut(), before) {
                        tr.push(TraceEvent {
                            rule: Rule::OccursFail,
                            head: Some(head.clone()),
                            measure_before: before,
                            measure_after: None,
                            binding: None,
                        });
                    }
                    return UnifyOutcome::Failure(UnifyFailure::OccursCheck {
                        variable: a.clone(),
                        term: t.clone(),
                    });
                }
                (rule, Some((a.clone(), t.clone())))
            }
            (TypeTerm::Arrow(l1, r1), TypeTerm::Arrow(l2, r2)) => {
                work.push_front(Constraint::new((**r1).clone(), (**r2).clone()));
                work.push_front(Constraint::new((**l1).clone(), (**l2).clone()));
                (Rule::Decompose, None)
            }
        };

        if let Some((v, t)) = &binding {
            let s = Substitution::singleton(v.clone(), t.clone())
                .expect("unify never binds a variable to itself");
            for k in work.iter_mut() {
                if k.lhs.occurs(v) || k.rhs.occurs(v) {
                    *k = s.apply_constraint(k);
                }
            }
            bindings.push(s);
        }

        if let (Some(tr), Some(before)) = (trace.as_deref_mut(), before) {
            tr.push(TraceEvent {
                rule,
                head: Some(head),
                measure_before: before,
                measure_after: Some(measure_of(&work)),
                binding,
            });
        }
    }

    let result = bindings
        .iter()
        .rev()
        .fold(Substitution::empty(), |acc, s| s.compose_into(acc));
    UnifyOutcome::Success(result)
}
