use std::fmt::Write;

use crate::constraint::{Constraint, ConstraintList};
use crate::substitution::Substitution;
use crate::term::TypeTerm;
use crate::unify::TraceEvent;

/// Canonical form: the left child of an arrow is parenthesized only when it
/// is itself an arrow.
pub fn print_type(t: &TypeTerm) -> String {
    let mut out = String::new();
    write_type(&mut out, t);
    out
}

fn write_type(out: &mut String, t: &TypeTerm) {
    match t {
        TypeTerm::Var(v) => out.push_str(v.name()),
        TypeTerm::Arrow(l, r) => {
            if l.is_var() {
                write_type(out, l);
            } else {
                out.push('(');
                write_type(out, l);
                out.push(')');
            }
            out.push_str(" -> ");
            write_type(out, r);
        }
    }
}

pub fn print_constraint(c: &Constraint) -> String {
    format!("{} = {}", print_type(&c.lhs), print_type(&c.rhs))
}

/// One constraint per line, each line terminated by a newline.
pub fn print_constraints(c: &ConstraintList) -> String {
    c.iter().map(|k| print_constraint(k) + "\n").collect()
}

/// `{v1 |-> t1, v2 |-> t2}` with keys ascending.
pub fn print_subst(s: &Substitution) -> String {
    let body: Vec<String> = s
        .iter()
        .map(|(v, t)| format!("{} |-> {}", v, print_type(t)))
        .collect();
    format!("{{{}}}", body.join(", "))
}

/// One line per event: `Rule: head; [before] -> [after]; bind v |-> t`.
pub fn print_trace(events: &[TraceEvent]) -> String {
    let mut out = String::new();
    for e in events {
        out.push_str(e.rule.name());
        out.push(':');
        if let Some(h) = &e.head {
            let _ = write!(out, " {};", print_constraint(h));
        }
        let _ = write!(out, " {}", e.measure_before);
        if let Some(after) = e.measure_after {
            let _ = write!(out, " -> {after}");
        }
        if let Some((v, t)) = &e.binding {
            let _ = write!(out, "; bind {} |-> {}", v, print_type(t));
        }
        out.push('\n');
    }
    out
}
