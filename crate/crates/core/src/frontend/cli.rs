//! `mgu solve | measure | trace | check-axioms`.
//!
//! Exit codes: 0 success, 1 occurs-check failure or a failed axiom suite,
//! 2 usage, I/O or parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::axioms::{run_suite, GenConfig};
use crate::constraint::ConstraintList;
use crate::frontend::json::{solve_doc, suite_doc, trace_doc};
use crate::frontend::{parse_constraints, print_subst, print_trace};
use crate::unify::{measure, unify, unify_traced, UnifyOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mgu",
    version,
    about = "First-order unification of simple-type constraints"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Unify the constraints in FILE and print the substitution.
    Solve {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the termination triple of the constraints in FILE.
    Measure { file: PathBuf },
    /// Print every step of unification.
    Trace {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check the unifier axioms on randomly generated constraint lists.
    CheckAxioms {
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        max_depth: u32,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_vars: u32,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve { file, json } => solve(&file, json, out, err),
        Command::Measure { file } => measure_cmd(&file, out, err),
        Command::Trace { file, json } => trace(&file, json, out, err),
        Command::CheckAxioms {
            cases,
            seed,
            max_depth,
            max_vars,
            max_len,
            json,
        } => {
            let cfg = GenConfig {
                seed,
                cases,
                max_depth: max_depth as usize,
                max_vars: max_vars as usize,
                max_len,
            };
            check_axioms(&cfg, json, out, err)
        }
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_USAGE
    })
}

fn load(path: &Path, err: &mut dyn Write) -> std::io::Result<Option<ConstraintList>> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: cannot read {}: {e}", path.display())?;
            return Ok(None);
        }
    };
    match parse_constraints(&text) {
        Ok(c) => Ok(Some(c)),
        Err(e) => {
            writeln!(
                err,
                "{}:{}:{}: {}",
                path.display(),
                e.line,
                e.column,
                e.message
            )?;
            Ok(None)
        }
    }
}

fn report_outcome(outcome: &UnifyOutcome, err: &mut dyn Write) -> std::io::Result<i32> {
    match outcome {
        UnifyOutcome::Success(_) => Ok(EXIT_OK),
        UnifyOutcome::Failure(f) => {
            writeln!(err, "{f}")?;
            Ok(EXIT_FAIL)
        }
    }
}

fn solve(
    path: &Path,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let Some(c) = load(path, err)? else {
        return Ok(EXIT_USAGE);
    };
    let outcome = unify(&c);
    if json {
        writeln!(out, "{}", serde_json::to_string(&solve_doc(&outcome))?)?;
    } else if let UnifyOutcome::Success(s) = &outcome {
        writeln!(out, "{}", print_subst(s))?;
    }
    report_outcome(&outcome, err)
}

fn measure_cmd(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let Some(c) = load(path, err)? else {
        return Ok(EXIT_USAGE);
    };
    let m = measure(&c);
    writeln!(
        out,
        "uniq_vars={} arrows={} len={}",
        m.uniq_vars, m.arrows, m.length
    )?;
    Ok(EXIT_OK)
}

fn trace(
    path: &Path,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let Some(c) = load(path, err)? else {
        return Ok(EXIT_USAGE);
    };
    let (outcome, events) = unify_traced(&c);
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&trace_doc(&outcome, &events))?
        )?;
    } else {
        out.write_all(print_trace(&events).as_bytes())?;
    }
    report_outcome(&outcome, err)
}

fn check_axioms(
    cfg: &GenConfig,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    if let Err(e) = cfg.validate() {
        writeln!(err, "error: {e}")?;
        return Ok(EXIT_USAGE);
    }
    let reports = run_suite(cfg);
    let doc = suite_doc(cfg, &reports);
    if json {
        writeln!(out, "{}", serde_json::to_string(&doc)?)?;
    } else {
        for r in &reports {
            writeln!(
                out,
                "axiom {}: {} cases_run={} cases_applicable={} failures={}",
                r.axiom,
                if r.passed() { "PASS" } else { "FAIL" },
                r.cases_run,
                r.cases_applicable,
                r.failures.len()
            )?;
        }
    }
    for r in &reports {
        if let Some(cx) = r.failures.first() {
            writeln!(
                err,
                "axiom {} counterexample: input {}; expected {}; got {}",
                r.axiom, cx.input, cx.expected, cx.actual
            )?;
        }
        if r.is_vacuous() {
            writeln!(
                err,
                "axiom {}: only {} of {} cases applicable; generator settings are vacuous",
                r.axiom, r.cases_applicable, r.cases_run
            )?;
        }
    }
    Ok(if doc.passed { EXIT_OK } else { EXIT_FAIL })
}
