#![allow(dead_code)]

pub mod golden;
pub mod oracle;
pub mod replay;

use mgu::frontend::{parse_constraints, parse_type};
use mgu::{ConstraintList, Substitution, TypeTerm, TypeVar};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn v(name: &str) -> TypeVar {
    TypeVar::new(name).unwrap()
}

pub fn ty(s: &str) -> TypeTerm {
    parse_type(s).unwrap()
}

pub fn cl(s: &str) -> ConstraintList {
    parse_constraints(s).unwrap()
}

pub fn subst(pairs: &[(&str, &str)]) -> Substitution {
    Substitution::from_bindings(pairs.iter().map(|(k, t)| (v(k), ty(t)))).unwrap()
}

/// Small random terms over a fixed alphabet, independent of the library's
/// own generators.
#[derive(Debug, Clone)]
pub struct TermGen {
    pub alphabet: Vec<TypeVar>,
    pub max_depth: usize,
    pub max_len: usize,
}

impl Default for TermGen {
    fn default() -> Self {
        TermGen {
            alphabet: ["a", "b", "c", "d"].iter().map(|n| v(n)).collect(),
            max_depth: 4,
            max_len: 5,
        }
    }
}

impl TermGen {
    pub fn var<R: Rng>(&self, rng: &mut R) -> TypeVar {
        self.alphabet.choose(rng).unwrap().clone()
    }

    pub fn term<R: Rng>(&self, rng: &mut R) -> TypeTerm {
        self.term_depth(self.max_depth, rng)
    }

    pub fn term_depth<R: Rng>(&self, depth: usize, rng: &mut R) -> TypeTerm {
        if depth <= 1 || rng.gen_bool(0.45) {
            TypeTerm::Var(self.var(rng))
        } else {
            TypeTerm::arrow(
                self.term_depth(depth - 1, rng),
                self.term_depth(depth - 1, rng),
            )
        }
    }

    pub fn arrow<R: Rng>(&self, rng: &mut R) -> TypeTerm {
        let depth = self.max_depth.max(2);
        TypeTerm::arrow(
            self.term_depth(depth - 1, rng),
            self.term_depth(depth - 1, rng),
        )
    }

    /// A term in which `a` does not occur (falls back to another variable).
    pub fn term_without<R: Rng>(&self, a: &TypeVar, rng: &mut R) -> TypeTerm {
        let others: Vec<TypeVar> = self.alphabet.iter().filter(|x| *x != a).cloned().collect();
        let g = TermGen {
            alphabet: others,
            ..self.clone()
        };
        g.term(rng)
    }

    pub fn list<R: Rng>(&self, rng: &mut R) -> ConstraintList {
        let n = rng.gen_range(0..=self.max_len);
        (0..n)
            .map(|_| mgu::Constraint::new(self.term(rng), self.term(rng)))
            .collect()
    }

    pub fn subst<R: Rng>(&self, rng: &mut R) -> Substitution {
        let mut pairs: Vec<(TypeVar, TypeTerm)> = Vec::new();
        for a in &self.alphabet {
            if rng.gen_bool(0.5) {
                pairs.push((a.clone(), self.term_depth(3, rng)));
            }
        }
        Substitution::from_bindings(pairs).unwrap()
    }
}

pub fn count_nodes(t: &TypeTerm) -> (usize, usize) {
    match t {
        TypeTerm::Var(_) => (1, 1),
        TypeTerm::Arrow(l, r) => {
            let (nl, ll) = count_nodes(l);
            let (nr, lr) = count_nodes(r);
            (nl + nr + 1, ll + lr)
        }
    }
}

/// All terms of depth at most `depth` over `alphabet`.
pub fn all_terms(alphabet: &[TypeVar], depth: usize) -> Vec<TypeTerm> {
    let vars: Vec<TypeTerm> = alphabet.iter().cloned().map(TypeTerm::Var).collect();
    if depth <= 1 {
        return vars;
    }
    let smaller = all_terms(alphabet, depth - 1);
    let mut out = vars;
    for l in &smaller {
        for r in &smaller {
            out.push(TypeTerm::arrow(l.clone(), r.clone()));
        }
    }
    out
}
