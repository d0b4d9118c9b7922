//! Substitutions as finite maps from type variables to types.
//!
//! Composition follows the finite-map construction literally:
//! `σ ∘ σ′ = subst_diff(σ′(σ), σ′)`, where `σ′(σ)` applies `σ′` to every
//! bound term of `σ` and `subst_diff` merges key-wise, preferring the
//! first map. The result satisfies `(σ ∘ σ′)(τ) = σ′(σ(τ))`.
//!
//! Identity bindings (`α ↦ α`) can arise from composition and are kept.
//! [`Substitution::ext_eq`] treats them as absent.

use std::collections::btree_map::{self, BTreeMap};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::constraint::{Constraint, ConstraintList};
use crate::term::{TypeTerm, TypeVar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("identity binding {0} |-> {0} is not allowed in a singleton substitution")]
    IdentityBinding(TypeVar),
    #[error("variable {0} is bound more than once")]
    DuplicateBinding(TypeVar),
}

/// A finite map `TypeVar ↦ TypeTerm`, iterated in ascending variable name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Substitution {
    bindings: BTreeMap<TypeVar, TypeTerm>,
}

impl Substitution {
    /// The identity substitution `σ_E`.
    pub fn empty() -> Self {
        Substitution::default()
    }

    /// `{v ↦ t}`. Rejects `t = v`.
    pub fn singleton(v: TypeVar, t: TypeTerm) -> Result<Self, SubstError> {
        if t.as_var() == Some(&v) {
            return Err(SubstError::IdentityBinding(v));
        }
        let mut bindings = BTreeMap::new();
        bindings.insert(v, t);
        Ok(Substitution { bindings })
    }

    /// Builds a map from explicit bindings. Identity bindings are accepted;
    /// a repeated key is an error.
    pub fn from_bindings<I>(pairs: I) -> Result<Self, SubstError>
    where
        I: IntoIterator<Item = (TypeVar, TypeTerm)>,
    {
        let mut bindings = BTreeMap::new();
        for (v, t) in pairs {
            match bindings.entry(v) {
                btree_map::Entry::Occupied(e) => {
                    return Err(SubstError::DuplicateBinding(e.key().clone()))
                }
                btree_map::Entry::Vacant(e) => {
                    e.insert(t);
                }
            }
        }
        Ok(Substitution { bindings })
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn get(&self, v: &TypeVar) -> Option<&TypeTerm> {
        self.bindings.get(v)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, TypeVar, TypeTerm> {
        self.bindings.iter()
    }

    pub fn has_identity_binding(&self) -> bool {
        self.bindings.iter().any(|(v, t)| t.as_var() == Some(v))
    }

    pub fn apply_type(&self, t: &TypeTerm) -> TypeTerm {
        match t {
            TypeTerm::Var(v) => self.bindings.get(v).cloned().unwrap_or_else(|| t.clone()),
            TypeTerm::Arrow(l, r) => {
                let nl = self.apply_shared(l);
                let nr = self.apply_shared(r);
                TypeTerm::Arrow(nl, nr)
            }
        }
    }

    // Reuses the input allocation when nothing below it changes.
    fn apply_shared(&self, t: &Arc<TypeTerm>) -> Arc<TypeTerm> {
        match &**t {
            TypeTerm::Var(v) => match self.bindings.get(v) {
                Some(bound) => Arc::new(bound.clone()),
                None => Arc::clone(t),
            },
            TypeTerm::Arrow(l, r) => {
                let nl = self.apply_shared(l);
                let nr = self.apply_shared(r);
                if Arc::ptr_eq(&nl, l) && Arc::ptr_eq(&nr, r) {
                    Arc::clone(t)
                } else {
                    Arc::new(TypeTerm::Arrow(nl, nr))
                }
            }
        }
    }

    pub fn apply_constraint(&self, c: &Constraint) -> Constraint {
        Constraint::new(self.apply_type(&c.lhs), self.apply_type(&c.rhs))
    }

    pub fn apply_list(&self, c: &ConstraintList) -> ConstraintList {
        c.iter().map(|k| self.apply_constraint(k)).collect()
    }

    /// Keys in ascending order.
    pub fn dom(&self) -> Vec<TypeVar> {
        self.bindings.keys().cloned().collect()
    }

    /// Free variables of every bound term, concatenated in key order.
    pub fn range_vars(&self) -> Vec<TypeVar> {
        let mut out = Vec::new();
        for t in self.bindings.values() {
            t.collect_ftv(&mut out);
        }
        out
    }

    /// `dom ++ range`.
    pub fn ftv(&self) -> Vec<TypeVar> {
        let mut out = self.dom();
        out.extend(self.range_vars());
        out
    }

    /// `subst_diff σ σ′`: key-wise merge over both domains; `self` wins.
    pub fn subst_diff(&self, other: &Substitution) -> Substitution {
        let keys: BTreeSet<&TypeVar> = self.bindings.keys().chain(other.bindings.keys()).collect();
        let bindings = keys
            .into_iter()
            .filter_map(|k| {
                choose(self.bindings.get(k), other.bindings.get(k)).map(|t| (k.clone(), t.clone()))
            })
            .collect();
        Substitution { bindings }
    }

    /// `self(target)`: applies `self` to every bound term of `target`,
    /// keeping `target`'s domain. Identity bindings may result.
    pub fn map_range(&self, target: &Substitution) -> Substitution {
        let bindings = target
            .bindings
            .iter()
            .map(|(v, t)| (v.clone(), self.apply_type(t)))
            .collect();
        Substitution { bindings }
    }

    /// `self ∘ then`, applying `self` first: `(self ∘ then)(τ) = then(self(τ))`.
    pub fn compose(&self, then: &Substitution) -> Substitution {
        then.map_range(self).subst_diff(then)
    }

    /// Same map as [`Substitution::compose`], reusing `then`'s storage.
    pub(crate) fn compose_into(&self, then: Substitution) -> Substitution {
        let mapped = then.map_range(self);
        let mut bindings = then.bindings;
        for (k, t) in mapped.bindings {
            bindings.insert(k, t);
        }
        Substitution { bindings }
    }

    /// `σ ≈ σ′`: pointwise agreement on every variable. Outside both
    /// domains both maps are the identity, so the union of domains decides it.
    pub fn ext_eq(&self, other: &Substitution) -> bool {
        self.bindings.keys().chain(other.bindings.keys()).all(|v| {
            let x = TypeTerm::Var(v.clone());
            self.apply_type(&x) == other.apply_type(&x)
        })
    }
}

/// The merge rule for `subst_diff`: the first map's value wins.
pub fn choose<T>(first: Option<T>, second: Option<T>) -> Option<T> {
    match (first, second) {
        (Some(t1), Some(_)) => Some(t1),
        (Some(t1), None) => Some(t1),
        (None, Some(t2)) => Some(t2),
        (None, None) => None,
    }
}

impl<'a> IntoIterator for &'a Substitution {
    type Item = (&'a TypeVar, &'a TypeTerm);
    type IntoIter = btree_map::Iter<'a, TypeVar, TypeTerm>;

    fn into_iter(self) -> Self::IntoIter {
        self.bindings.iter()
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::frontend::print_subst(self))
    }
}
