//! Executable checks of the idempotent most-general-unifier axioms for
//! [`unify`](crate::unify::unify), plus the random generators that feed them.
//!
//! The seven axioms, for `unify(C) = σ`:
//!
//! - i: `σ ⊨ C`
//! - ii: `σ′ ⊨ C ⇒ ∃σ″. σ′ ≈ σ ∘ σ″`
//! - iii: `FTV(σ) ⊆ FTV(C)`
//! - iv: `σ ⊨ C ⇒ unify(C)` succeeds
//! - v: `σ ∘ σ ≈ σ`
//! - vi: `unify([]) = σ_E`
//! - vii: `unify(C′) = σ′ ∧ unify(σ′(C″)) = σ″ ∧ unify(C′ ++ C″) = σ ⇒ σ ≈ σ′ ∘ σ″`
//!
//! Generation is deterministic: case `k` of a run draws from ChaCha8 seeded
//! with `seed` on stream `k`, so cases can be evaluated in parallel and
//! still reproduce the sequential result.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::constraint::{satisfies, Constraint, ConstraintList};
use crate::frontend::{print_constraint, print_subst};
use crate::substitution::Substitution;
use crate::term::{TypeTerm, TypeVar};
use crate::unify::{unify, UnifyOutcome};

/// Minimum share of applicable cases for axioms with hypotheses.
pub const MIN_APPLICABLE_FRACTION: f64 = 0.30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenConfig {
    pub seed: u64,
    pub max_depth: usize,
    pub max_vars: usize,
    pub max_len: usize,
    pub cases: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            max_depth: 4,
            max_vars: 6,
            max_len: 6,
            cases: 1000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("max_depth must be at least 1")]
    ZeroDepth,
    #[error("max_vars must be at least 1")]
    ZeroVars,
}

impl GenConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.max_depth == 0 {
            return Err(ConfigError::ZeroDepth);
        }
        if self.max_vars == 0 {
            return Err(ConfigError::ZeroVars);
        }
        Ok(())
    }

    /// The variable alphabet `v0 .. v(max_vars-1)`.
    pub fn alphabet(&self) -> Vec<TypeVar> {
        (0..self.max_vars)
            .map(|i| TypeVar::new(&format!("v{i}")).expect("generated names are identifiers"))
            .collect()
    }

    /// The random stream for case `index`.
    pub fn case_rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

fn gen_type_over<R: Rng + ?Sized>(alphabet: &[TypeVar], depth: usize, rng: &mut R) -> TypeTerm {
    if depth <= 1 || rng.gen_bool(0.5) {
        TypeTerm::Var(alphabet.choose(rng).expect("alphabet is non-empty").clone())
    } else {
        let l = gen_type_over(alphabet, depth - 1, rng);
        let r = gen_type_over(alphabet, depth - 1, rng);
        TypeTerm::arrow(l, r)
    }
}

/// A random term of depth at most `max_depth` over the config's alphabet.
/// Each node is a variable or an arrow with equal probability; nodes at the
/// depth limit are variables.
pub fn gen_type<R: Rng + ?Sized>(cfg: &GenConfig, rng: &mut R) -> TypeTerm {
    gen_type_over(&cfg.alphabet(), cfg.max_depth, rng)
}

/// A generated constraint list. `witness` is set when the list came from the
/// satisfiable construction and satisfies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedCase {
    pub constraints: ConstraintList,
    pub witness: Option<Substitution>,
}

/// With probability ½ a list of independent random constraints; otherwise
/// a list built to be satisfied by a random idempotent substitution `s_w`.
///
/// The satisfiable construction binds a random subset `D` of the alphabet to
/// terms over the remaining variables, so `s_w(s_w(τ)) = s_w(τ)`. It then
/// emits constraints of three shapes, all satisfied by `s_w`:
///
/// - `τ ≐ τ`;
/// - `α ≐ s_w(α)` or `s_w(α) ≐ α` for `α ∈ D`;
/// - `e1(τ) ≐ e2(τ)`, where each `e` independently replaces some leaves
///   `α ∈ D` of `τ` by `s_w(α)`.
pub fn gen_constraints<R: Rng + ?Sized>(cfg: &GenConfig, rng: &mut R) -> GeneratedCase {
    let alphabet = cfg.alphabet();
    let len = rng.gen_range(0..=cfg.max_len);
    if rng.gen_bool(0.5) {
        let constraints = (0..len)
            .map(|_| {
                let l = gen_type_over(&alphabet, cfg.max_depth, rng);
                let r = gen_type_over(&alphabet, cfg.max_depth, rng);
                Constraint::new(l, r)
            })
            .collect();
        return GeneratedCase {
            constraints,
            witness: None,
        };
    }

    let mut shuffled = alphabet.clone();
    shuffled.shuffle(rng);
    let bound = rng.gen_range(0..alphabet.len());
    let (dom, free) = shuffled.split_at(bound);
    let range_depth = cfg.max_depth.saturating_sub(1).max(1);
    let witness = Substitution::from_bindings(
        dom.iter()
            .map(|a| (a.clone(), gen_type_over(free, range_depth, rng))),
    )
    .expect("shuffled alphabet has no duplicates");

    let mut items = Vec::with_capacity(len);
    for _ in 0..len {
        let shape = rng.gen_range(0..3);
        let k = match shape {
            0 => {
                let t = gen_type_over(&alphabet, cfg.max_depth, rng);
                Constraint::new(t.clone(), t)
            }
            1 if !dom.is_empty() => {
                let a = dom.choose(rng).expect("non-empty");
                let image = witness.get(a).expect("bound").clone();
                let var = TypeTerm::Var(a.clone());
                if rng.gen_bool(0.5) {
                    Constraint::new(var, image)
                } else {
                    Constraint::new(image, var)
                }
            }
            _ => {
                let skeleton = gen_type_over(&alphabet, cfg.max_depth, rng);
                let l = expand(&skeleton, &witness, rng);
                let r = expand(&skeleton, &witness, rng);
                Constraint::new(l, r)
            }
        };
        items.push(k);
    }
    GeneratedCase {
        constraints: ConstraintList::new(items),
        witness: Some(witness),
    }
}

fn expand<R: Rng + ?Sized>(t: &TypeTerm, s: &Substitution, rng: &mut R) -> TypeTerm {
    match t {
        TypeTerm::Var(v) => match s.get(v) {
            Some(image) if rng.gen_bool(0.5) => image.clone(),
            _ => t.clone(),
        },
        TypeTerm::Arrow(l, r) => TypeTerm::arrow(expand(l, s, rng), expand(r, s, rng)),
    }
}

/// Binds each alphabet variable with probability ½ to a random term.
pub fn gen_substitution<R: Rng + ?Sized>(cfg: &GenConfig, rng: &mut R) -> Substitution {
    let alphabet = cfg.alphabet();
    let mut pairs = Vec::new();
    for a in &alphabet {
        if rng.gen_bool(0.5) {
            pairs.push((a.clone(), gen_type_over(&alphabet, cfg.max_depth, rng)));
        }
    }
    Substitution::from_bindings(pairs).expect("alphabet has no duplicates")
}

/// `unify(c) ∘ σ_g` for a random `σ_g` when `c` unifies; `None` otherwise.
pub fn gen_satisfier<R: Rng + ?Sized>(
    c: &ConstraintList,
    cfg: &GenConfig,
    rng: &mut R,
) -> Option<Substitution> {
    let sigma = unify(c).into_success()?;
    let extra = gen_substitution(cfg, rng);
    Some(sigma.compose(&extra))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    I,
    Ii,
    Iii,
    Iv,
    V,
    Vi,
    Vii,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::I,
        Axiom::Ii,
        Axiom::Iii,
        Axiom::Iv,
        Axiom::V,
        Axiom::Vi,
        Axiom::Vii,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::I => "i",
            Axiom::Ii => "ii",
            Axiom::Iii => "iii",
            Axiom::Iv => "iv",
            Axiom::V => "v",
            Axiom::Vi => "vi",
            Axiom::Vii => "vii",
        }
    }

    /// Axioms whose check only fires when a hypothesis holds.
    pub fn has_hypotheses(self) -> bool {
        !matches!(self, Axiom::Vi)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckResult {
    NotApplicable,
    Held,
    Violated(Counterexample),
}

impl CheckResult {
    pub fn is_applicable(&self) -> bool {
        !matches!(self, CheckResult::NotApplicable)
    }

    fn and(self, other: CheckResult) -> CheckResult {
        match (self, other) {
            (v @ CheckResult::Violated(_), _) | (_, v @ CheckResult::Violated(_)) => v,
            (CheckResult::Held, _) | (_, CheckResult::Held) => CheckResult::Held,
            _ => CheckResult::NotApplicable,
        }
    }
}

fn show_list(c: &ConstraintList) -> String {
    let parts: Vec<String> = c.iter().map(print_constraint).collect();
    format!("[{}]", parts.join("; "))
}

fn show_outcome(o: &UnifyOutcome) -> String {
    match o {
        UnifyOutcome::Success(s) => print_subst(s),
        UnifyOutcome::Failure(f) => f.to_string(),
    }
}

fn violated(input: String, expected: impl Into<String>, actual: impl Into<String>) -> CheckResult {
    CheckResult::Violated(Counterexample {
        input,
        expected: expected.into(),
        actual: actual.into(),
    })
}

pub fn check_axiom_i(c: &ConstraintList) -> CheckResult {
    match unify(c) {
        UnifyOutcome::Success(s) if satisfies(&s, c) => CheckResult::Held,
        UnifyOutcome::Success(s) => violated(
            show_list(c),
            "unify(C) satisfies C",
            format!("{} does not", print_subst(&s)),
        ),
        UnifyOutcome::Failure(_) => CheckResult::NotApplicable,
    }
}

/// Uses `σ″ := satisfier` as the witness: for idempotent `σ`, any
/// satisfier factors through it as itself. Returns the witness when the
/// hypotheses held.
pub fn check_axiom_ii(
    c: &ConstraintList,
    satisfier: &Substitution,
) -> (CheckResult, Option<Substitution>) {
    let Some(sigma) = unify(c).into_success() else {
        return (CheckResult::NotApplicable, None);
    };
    if !satisfies(satisfier, c) {
        return (CheckResult::NotApplicable, None);
    }
    let factored = sigma.compose(satisfier);
    let result = if satisfier.ext_eq(&factored) {
        CheckResult::Held
    } else {
        violated(
            format!("{} with satisfier {}", show_list(c), print_subst(satisfier)),
            format!("satisfier ≈ {} ∘ satisfier", print_subst(&sigma)),
            print_subst(&factored),
        )
    };
    (result, Some(satisfier.clone()))
}

pub fn check_axiom_iii(c: &ConstraintList) -> CheckResult {
    let Some(sigma) = unify(c).into_success() else {
        return CheckResult::NotApplicable;
    };
    let allowed = c.ftv_set();
    let extra: BTreeSet<TypeVar> = sigma
        .ftv()
        .into_iter()
        .filter(|v| !allowed.contains(v))
        .collect();
    if extra.is_empty() {
        CheckResult::Held
    } else {
        let names: Vec<&str> = extra.iter().map(TypeVar::name).collect();
        violated(
            show_list(c),
            "FTV(unify(C)) ⊆ FTV(C)",
            format!("{} mentions {}", print_subst(&sigma), names.join(", ")),
        )
    }
}

/// Applicable when `witness` satisfies `c`.
pub fn check_axiom_iv(c: &ConstraintList, witness: &Substitution) -> CheckResult {
    if !satisfies(witness, c) {
        return CheckResult::NotApplicable;
    }
    match unify(c) {
        UnifyOutcome::Success(_) => CheckResult::Held,
        failed => violated(
            format!("{} satisfied by {}", show_list(c), print_subst(witness)),
            "unify(C) succeeds",
            show_outcome(&failed),
        ),
    }
}

pub fn check_axiom_v(c: &ConstraintList) -> CheckResult {
    let Some(sigma) = unify(c).into_success() else {
        return CheckResult::NotApplicable;
    };
    let twice = sigma.compose(&sigma);
    if twice.ext_eq(&sigma) {
        CheckResult::Held
    } else {
        violated(
            show_list(c),
            format!("σ ∘ σ ≈ σ = {}", print_subst(&sigma)),
            print_subst(&twice),
        )
    }
}

pub fn check_axiom_vi() -> CheckResult {
    match unify(&ConstraintList::empty()) {
        UnifyOutcome::Success(s) if s.is_empty() => CheckResult::Held,
        other => violated("[]".to_string(), "{}", show_outcome(&other)),
    }
}

/// Splits `c` at `split_index` into `c1 ++ c2`. Besides the equation itself
/// this checks that success propagates both ways: `unify(c)` succeeds iff
/// `unify(c1)` and `unify(σ′(c2))` both do.
///
/// Panics if `split_index > c.len()`.
pub fn check_axiom_vii(c: &ConstraintList, split_index: usize) -> CheckResult {
    assert!(
        split_index <= c.len(),
        "split index {split_index} out of range"
    );
    let (c1, c2) = c.split_at(split_index);
    let input = format!("{} ++ {}", show_list(&c1), show_list(&c2));
    let whole = unify(c);
    let first = unify(&c1);
    let rest = first
        .success()
        .map(|s1| (s1.clone(), unify(&s1.apply_list(&c2))));

    match (whole, rest) {
        (UnifyOutcome::Success(sigma), Some((s1, UnifyOutcome::Success(s2)))) => {
            let composed = s1.compose(&s2);
            if sigma.ext_eq(&composed) {
                CheckResult::Held
            } else {
                violated(
                    input,
                    format!("unify(C′ ++ C″) = {} ≈ σ′ ∘ σ″", print_subst(&sigma)),
                    print_subst(&composed),
                )
            }
        }
        (UnifyOutcome::Success(_), None) => {
            violated(input, "unify(C′) succeeds", show_outcome(&first))
        }
        (UnifyOutcome::Success(_), Some((_, failed))) => {
            violated(input, "unify(σ′(C″)) succeeds", show_outcome(&failed))
        }
        (failed @ UnifyOutcome::Failure(_), Some((_, UnifyOutcome::Success(_)))) => {
            violated(input, "unify(C′ ++ C″) succeeds", show_outcome(&failed))
        }
        (UnifyOutcome::Failure(_), _) => CheckResult::NotApplicable,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub cases_run: usize,
    pub cases_applicable: usize,
    pub failures: Vec<Counterexample>,
    /// For axiom ii: `(case index, σ″)` for every applicable case.
    pub witnesses: Vec<(usize, Substitution)>,
}

impl AxiomReport {
    fn new(axiom: Axiom) -> Self {
        AxiomReport {
            axiom,
            cases_run: 0,
            cases_applicable: 0,
            failures: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn applicable_fraction(&self) -> f64 {
        if self.cases_run == 0 {
            1.0
        } else {
            self.cases_applicable as f64 / self.cases_run as f64
        }
    }

    /// Too few cases met the axiom's hypotheses for a pass to mean much.
    pub fn is_vacuous(&self) -> bool {
        self.axiom.has_hypotheses() && self.applicable_fraction() < MIN_APPLICABLE_FRACTION
    }

    fn record(&mut self, result: CheckResult) {
        self.cases_run += 1;
        match result {
            CheckResult::NotApplicable => {}
            CheckResult::Held => self.cases_applicable += 1,
            CheckResult::Violated(cx) => {
                self.cases_applicable += 1;
                self.failures.push(cx);
            }
        }
    }
}

struct CaseOutcome {
    results: [CheckResult; 7],
    witness: Option<Substitution>,
}

fn run_case(cfg: &GenConfig, index: usize) -> CaseOutcome {
    let mut rng = cfg.case_rng(index as u64);
    let case = gen_constraints(cfg, &mut rng);
    let c = &case.constraints;

    let mut satisfiers: Vec<Substitution> = case.witness.iter().cloned().collect();
    satisfiers.extend(gen_satisfier(c, cfg, &mut rng));
    let mut ii = CheckResult::NotApplicable;
    let mut witness = None;
    for s in &satisfiers {
        let (r, w) = check_axiom_ii(c, s);
        witness = witness.or(w);
        ii = ii.and(r);
    }

    let iv = match &case.witness {
        Some(w) => check_axiom_iv(c, w),
        None => CheckResult::NotApplicable,
    };

    let mut splits = vec![0, c.len()];
    if c.len() >= 2 {
        splits.push(rng.gen_range(1..c.len()));
    }
    splits.sort_unstable();
    splits.dedup();
    let vii = splits
        .into_iter()
        .map(|k| check_axiom_vii(c, k))
        .fold(CheckResult::NotApplicable, CheckResult::and);

    CaseOutcome {
        results: [
            check_axiom_i(c),
            ii,
            check_axiom_iii(c),
            iv,
            check_axiom_v(c),
            check_axiom_vi(),
            vii,
        ],
        witness,
    }
}

/// Runs all seven checks over `cfg.cases` generated inputs. Cases run in
/// parallel; reports are merged in case order.
pub fn run_suite(cfg: &GenConfig) -> Vec<AxiomReport> {
    let outcomes: Vec<CaseOutcome> = (0..cfg.cases)
        .into_par_iter()
        .map(|i| run_case(cfg, i))
        .collect();
    let mut reports: Vec<AxiomReport> = Axiom::ALL.iter().map(|&a| AxiomReport::new(a)).collect();
    for (index, outcome) in outcomes.into_iter().enumerate() {
        for (report, result) in reports.iter_mut().zip(outcome.results) {
            report.record(result);
        }
        if let Some(w) = outcome.witness {
            reports[1].witnesses.push((index, w));
        }
    }
    reports
}

/// Axioms i–v and vii whose applicable share fell below
/// [`MIN_APPLICABLE_FRACTION`].
pub fn vacuous_axioms(reports: &[AxiomReport]) -> Vec<Axiom> {
    reports
        .iter()
        .filter(|r| r.is_vacuous())
        .map(|r| r.axiom)
        .collect()
}
