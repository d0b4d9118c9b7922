//! Equational constraints `τ ≐ τ′` and ordered lists of them.

use std::collections::BTreeSet;
use std::ops::Index;

use crate::substitution::Substitution;
use crate::term::{TypeTerm, TypeVar};

/// An ordered equation. `a ≐ b` and `b ≐ a` are different values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constraint {
    pub lhs: TypeTerm,
    pub rhs: TypeTerm,
}

impl Constraint {
    pub fn new(lhs: TypeTerm, rhs: TypeTerm) -> Self {
        Constraint { lhs, rhs }
    }

    pub fn ftv(&self) -> Vec<TypeVar> {
        let mut out = Vec::new();
        self.lhs.collect_ftv(&mut out);
        self.rhs.collect_ftv(&mut out);
        out
    }

    pub fn arrow_count(&self) -> usize {
        self.lhs.arrow_count() + self.rhs.arrow_count()
    }

    pub fn is_satisfied_by(&self, s: &Substitution) -> bool {
        s.apply_type(&self.lhs) == s.apply_type(&self.rhs)
    }
}

/// Order and duplicates matter: unification consumes the head first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ConstraintList {
    items: Vec<Constraint>,
}

impl ConstraintList {
    pub fn new(items: Vec<Constraint>) -> Self {
        ConstraintList { items }
    }

    pub fn empty() -> Self {
        ConstraintList::default()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Constraint> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[Constraint] {
        &self.items
    }

    pub fn into_vec(self) -> Vec<Constraint> {
        self.items
    }

    pub fn append(&self, other: &ConstraintList) -> ConstraintList {
        let mut items = self.items.clone();
        items.extend(other.items.iter().cloned());
        ConstraintList { items }
    }

    /// Splits into `(c[..at], c[at..])`. Panics if `at > len`.
    pub fn split_at(&self, at: usize) -> (ConstraintList, ConstraintList) {
        let (l, r) = self.items.split_at(at);
        (
            ConstraintList::new(l.to_vec()),
            ConstraintList::new(r.to_vec()),
        )
    }

    pub fn ftv(&self) -> Vec<TypeVar> {
        let mut out = Vec::new();
        for c in &self.items {
            c.lhs.collect_ftv(&mut out);
            c.rhs.collect_ftv(&mut out);
        }
        out
    }

    pub fn ftv_set(&self) -> BTreeSet<TypeVar> {
        self.ftv().into_iter().collect()
    }

    pub fn unique_ftv_count(&self) -> usize {
        self.ftv_set().len()
    }

    pub fn arrow_count(&self) -> usize {
        self.items.iter().map(Constraint::arrow_count).sum()
    }
}

impl Index<usize> for ConstraintList {
    type Output = Constraint;

    fn index(&self, i: usize) -> &Constraint {
        &self.items[i]
    }
}

impl FromIterator<Constraint> for ConstraintList {
    fn from_iter<I: IntoIterator<Item = Constraint>>(iter: I) -> Self {
        ConstraintList {
            items: iter.into_iter().collect(),
        }
    }
}

impl IntoIterator for ConstraintList {
    type Item = Constraint;
    type IntoIter = std::vec::IntoIter<Constraint>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.into_iter()
    }
}

impl<'a> IntoIterator for &'a ConstraintList {
    type Item = &'a Constraint;
    type IntoIter = std::slice::Iter<'a, Constraint>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

impl From<Vec<Constraint>> for ConstraintList {
    fn from(items: Vec<Constraint>) -> Self {
        ConstraintList { items }
    }
}

pub fn ftv_list(c: &ConstraintList) -> Vec<TypeVar> {
    c.ftv()
}

/// `s ⊨ c`: every constraint has structurally equal sides after applying `s`.
pub fn satisfies(s: &Substitution, c: &ConstraintList) -> bool {
    c.iter().all(|k| k.is_satisfied_by(s))
}

pub fn unique_ftv_count(c: &ConstraintList) -> usize {
    c.unique_ftv_count()
}

pub fn arrow_count(c: &ConstraintList) -> usize {
    c.arrow_count()
}
