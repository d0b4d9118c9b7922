//! Simple types: type variables and arrows.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid type variable name {0:?}: expected a letter followed by letters, digits or '_'")]
pub struct InvalidVarName(pub String);

/// A named type variable. Ordered by name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeVar(Arc<str>);

impl TypeVar {
    pub fn new(name: &str) -> Result<Self, InvalidVarName> {
        if is_identifier(name) {
            Ok(TypeVar(Arc::from(name)))
        } else {
            Err(InvalidVarName(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FromStr for TypeVar {
    type Err = InvalidVarName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TypeVar::new(s)
    }
}

impl fmt::Display for TypeVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `τ ::= α | τ1 → τ2`
///
/// Children of an arrow are reference counted so that substitution can
/// share untouched subtrees. Equality, ordering and hashing are structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeTerm {
    Var(TypeVar),
    Arrow(Arc<TypeTerm>, Arc<TypeTerm>),
}

impl TypeTerm {
    pub fn var(v: TypeVar) -> Self {
        TypeTerm::Var(v)
    }

    pub fn arrow(left: TypeTerm, right: TypeTerm) -> Self {
        TypeTerm::Arrow(Arc::new(left), Arc::new(right))
    }

    pub fn is_var(&self) -> bool {
        matches!(self, TypeTerm::Var(_))
    }

    pub fn as_var(&self) -> Option<&TypeVar> {
        match self {
            TypeTerm::Var(v) => Some(v),
            TypeTerm::Arrow(..) => None,
        }
    }

    /// Every variable occurrence, left to right, duplicates kept.
    pub fn ftv(&self) -> Vec<TypeVar> {
        let mut out = Vec::new();
        self.collect_ftv(&mut out);
        out
    }

    pub(crate) fn collect_ftv(&self, out: &mut Vec<TypeVar>) {
        match self {
            TypeTerm::Var(v) => out.push(v.clone()),
            TypeTerm::Arrow(l, r) => {
                l.collect_ftv(out);
                r.collect_ftv(out);
            }
        }
    }

    pub fn occurs(&self, v: &TypeVar) -> bool {
        match self {
            TypeTerm::Var(w) => w == v,
            TypeTerm::Arrow(l, r) => l.occurs(v) || r.occurs(v),
        }
    }

    /// `subterms(α) = []`, `subterms(τ1 → τ2) = τ1 :: τ2 :: subterms(τ1) ++ subterms(τ2)`.
    /// The term itself is never included.
    pub fn subterms(&self) -> Vec<TypeTerm> {
        match self {
            TypeTerm::Var(_) => Vec::new(),
            TypeTerm::Arrow(l, r) => {
                let mut out = vec![(**l).clone(), (**r).clone()];
                out.extend(l.subterms());
                out.extend(r.subterms());
                out
            }
        }
    }

    pub fn arrow_count(&self) -> usize {
        match self {
            TypeTerm::Var(_) => 0,
            TypeTerm::Arrow(l, r) => 1 + l.arrow_count() + r.arrow_count(),
        }
    }

    /// Number of constructors (variables plus arrows).
    pub fn node_count(&self) -> usize {
        match self {
            TypeTerm::Var(_) => 1,
            TypeTerm::Arrow(l, r) => 1 + l.node_count() + r.node_count(),
        }
    }

    /// A variable has depth 1.
    pub fn depth(&self) -> usize {
        match self {
            TypeTerm::Var(_) => 1,
            TypeTerm::Arrow(l, r) => 1 + l.depth().max(r.depth()),
        }
    }
}

impl From<TypeVar> for TypeTerm {
    fn from(v: TypeVar) -> Self {
        TypeTerm::Var(v)
    }
}

/// Free variables of a type (duplicate-preserving).
pub fn ftv_type(t: &TypeTerm) -> Vec<TypeVar> {
    t.ftv()
}

pub fn occurs(v: &TypeVar, t: &TypeTerm) -> bool {
    t.occurs(v)
}

pub fn subterms(t: &TypeTerm) -> Vec<TypeTerm> {
    t.subterms()
}
