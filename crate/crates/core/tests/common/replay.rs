//! Re-executes a trace step by step on an explicit list and checks every
//! event against the termination table.

use std::collections::BTreeMap;

use mgu::termination::{classify, TableRow};
use mgu::unify::{measure, Rule};
use mgu::{Constraint, ConstraintList, Substitution, TraceEvent, TypeTerm, TypeVar};

fn occurrences(v: &TypeVar, c: &ConstraintList) -> usize {
    c.ftv().iter().filter(|x| *x == v).count()
}

fn rule_matches(rule: Rule, row: TableRow) -> bool {
    use TableRow::*;
    matches!(
        (rule, row),
        (Rule::Delete, DeleteVarInTail | DeleteVarNotInTail)
            | (Rule::VarVar, VarVar)
            | (Rule::VarTerm, VarTermFresh | VarTermInTail)
            | (Rule::TermVar, TermVarFresh | TermVarInTail)
            | (Rule::Decompose, Decompose)
    )
}

/// Returns the rows hit, or a description of the first mismatch.
pub fn replay(input: &ConstraintList, trace: &[TraceEvent]) -> Result<Vec<TableRow>, String> {
    let mut current = input.clone();
    let mut rows = Vec::new();
    for (i, e) in trace.iter().enumerate() {
        let last = i + 1 == trace.len();
        let before = measure(&current);
        if e.measure_before != before {
            return Err(format!(
                "step {i}: measure_before {} != {}",
                e.measure_before, before
            ));
        }
        match e.rule {
            Rule::EmptyDone => {
                if !current.is_empty() || !last || e.head.is_some() {
                    return Err(format!("step {i}: EmptyDone on a non-empty list"));
                }
                return Ok(rows);
            }
            Rule::OccursFail => {
                let (head, tail) = current.split_at(1);
                if e.head.as_ref() != Some(&head[0]) || classify(&head[0], &tail).is_some() || !last
                {
                    return Err(format!(
                        "step {i}: OccursFail on a head that passes the occurs check"
                    ));
                }
                return Ok(rows);
            }
            _ => {}
        }
        if current.is_empty() {
            return Err(format!("step {i}: {} on an empty list", e.rule));
        }
        let (head, tail) = current.split_at(1);
        let head = head[0].clone();
        if e.head.as_ref() != Some(&head) {
            return Err(format!("step {i}: head mismatch"));
        }
        let row = classify(&head, &tail).ok_or_else(|| format!("step {i}: no row for head"))?;
        if !rule_matches(e.rule, row) {
            return Err(format!(
                "step {i}: rule {} does not fit row {row:?}",
                e.rule
            ));
        }
        let next = match (&head.lhs, &head.rhs) {
            (TypeTerm::Arrow(l1, r1), TypeTerm::Arrow(l2, r2)) => {
                let mut items = vec![
                    Constraint::new((**l1).clone(), (**l2).clone()),
                    Constraint::new((**r1).clone(), (**r2).clone()),
                ];
                items.extend(tail.iter().cloned());
                ConstraintList::new(items)
            }
            (TypeTerm::Var(a), TypeTerm::Var(b)) if a == b => tail.clone(),
            (TypeTerm::Var(a), t) | (t, TypeTerm::Var(a)) => {
                if e.binding.as_ref() != Some(&(a.clone(), t.clone())) {
                    return Err(format!("step {i}: binding mismatch"));
                }
                let s = Substitution::from_bindings([(a.clone(), t.clone())]).unwrap();
                let next = s.apply_list(&tail);
                if matches!(row, TableRow::VarTermInTail | TableRow::TermVarInTail) {
                    // exact arrow change: the head loses |τ| arrows and every
                    // occurrence of α in the tail gains |τ|
                    let k = t.arrow_count() as i64;
                    let occ = occurrences(a, &tail) as i64;
                    let delta = next.arrow_count() as i64 - before.arrows as i64;
                    if delta != k * (occ - 1) {
                        return Err(format!("step {i}: arrow delta {delta} != {k}*({occ}-1)"));
                    }
                }
                next
            }
        };
        let after = measure(&next);
        if e.measure_after != Some(after) {
            return Err(format!(
                "step {i}: measure_after {:?} != {}",
                e.measure_after, after
            ));
        }
        if after >= before {
            return Err(format!("step {i}: {after} is not below {before}"));
        }
        if !row.admits(before, after) {
            return Err(format!(
                "step {i}: {before} -> {after} violates row {row:?}"
            ));
        }
        rows.push(row);
        current = next;
    }
    Err("trace ended without a terminal event".to_string())
}

pub fn row_histogram(rows: &[TableRow]) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for r in rows {
        *out.entry(format!("{r:?}")).or_insert(0) += 1;
    }
    out
}
