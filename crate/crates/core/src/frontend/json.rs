//! Structured output documents for `--json`.

use serde::Serialize;

use crate::axioms::{AxiomReport, Counterexample, GenConfig};
use crate::frontend::{print_constraint, print_type};
use crate::substitution::Substitution;
use crate::unify::{TraceEvent, UnifyFailure, UnifyOutcome};

#[derive(Debug, Serialize)]
pub struct BindingDoc {
    pub var: String,
    #[serde(rename = "type")]
    pub ty: String,
}

#[derive(Debug, Serialize)]
pub struct FailureDoc {
    pub variable: String,
    pub term: String,
}

#[derive(Debug, Serialize)]
pub struct SolveDoc {
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub substitution: Option<Vec<BindingDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<FailureDoc>,
}

#[derive(Debug, Serialize)]
pub struct TraceEventDoc {
    pub rule: &'static str,
    pub head: Option<String>,
    pub before: [usize; 3],
    pub after: Option<[usize; 3]>,
    pub binding: Option<BindingDoc>,
}

#[derive(Debug, Serialize)]
pub struct TraceDoc {
    #[serde(flatten)]
    pub result: SolveDoc,
    pub trace: Vec<TraceEventDoc>,
}

#[derive(Debug, Serialize)]
pub struct CounterexampleDoc {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Serialize)]
pub struct ReportDoc {
    pub axiom: &'static str,
    pub cases_run: usize,
    pub cases_applicable: usize,
    pub failures: usize,
    pub first_counterexample: Option<CounterexampleDoc>,
}

#[derive(Debug, Serialize)]
pub struct ConfigDoc {
    pub seed: u64,
    pub cases: usize,
    pub max_depth: usize,
    pub max_vars: usize,
    pub max_len: usize,
}

#[derive(Debug, Serialize)]
pub struct SuiteDoc {
    pub seed: u64,
    pub config: ConfigDoc,
    pub reports: Vec<ReportDoc>,
    pub vacuous: Vec<&'static str>,
    pub passed: bool,
}

fn bindings(s: &Substitution) -> Vec<BindingDoc> {
    s.iter()
        .map(|(v, t)| BindingDoc {
            var: v.to_string(),
            ty: print_type(t),
        })
        .collect()
}

pub fn solve_doc(outcome: &UnifyOutcome) -> SolveDoc {
    match outcome {
        UnifyOutcome::Success(s) => SolveDoc {
            outcome: "success",
            substitution: Some(bindings(s)),
            failure: None,
        },
        UnifyOutcome::Failure(UnifyFailure::OccursCheck { variable, term }) => SolveDoc {
            outcome: "failure",
            substitution: None,
            failure: Some(FailureDoc {
                variable: variable.to_string(),
                term: print_type(term),
            }),
        },
    }
}

pub fn trace_doc(outcome: &UnifyOutcome, events: &[TraceEvent]) -> TraceDoc {
    let trace = events
        .iter()
        .map(|e| TraceEventDoc {
            rule: e.rule.name(),
            head: e.head.as_ref().map(print_constraint),
            before: e.measure_before.as_array(),
            after: e.measure_after.map(|m| m.as_array()),
            binding: e.binding.as_ref().map(|(v, t)| BindingDoc {
                var: v.to_string(),
                ty: print_type(t),
            }),
        })
        .collect();
    TraceDoc {
        result: solve_doc(outcome),
        trace,
    }
}

fn counterexample(c: &Counterexample) -> CounterexampleDoc {
    CounterexampleDoc {
        input: c.input.clone(),
        expected: c.expected.clone(),
        actual: c.actual.clone(),
    }
}

pub fn suite_doc(cfg: &GenConfig, reports: &[AxiomReport]) -> SuiteDoc {
    let vacuous: Vec<&'static str> = reports
        .iter()
        .filter(|r| r.is_vacuous())
        .map(|r| r.axiom.id())
        .collect();
    SuiteDoc {
        seed: cfg.seed,
        config: ConfigDoc {
            seed: cfg.seed,
            cases: cfg.cases,
            max_depth: cfg.max_depth,
            max_vars: cfg.max_vars,
            max_len: cfg.max_len,
        },
        passed: vacuous.is_empty() && reports.iter().all(AxiomReport::passed),
        vacuous,
        reports: reports
            .iter()
            .map(|r| ReportDoc {
                axiom: r.axiom.id(),
                cases_run: r.cases_run,
                cases_applicable: r.cases_applicable,
                failures: r.failures.len(),
                first_counterexample: r.failures.first().map(counterexample),
            })
            .collect(),
    }
}
