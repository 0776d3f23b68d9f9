//! Types and their canonical forms modulo commutativity and associativity of
//! conjunction and distributivity of implication over conjunction.
//!
//! Two types are equivalent exactly when [`canonicalize`] maps them to the
//! same [`CanonicalType`]. A canonical type is a sorted multiset of
//! [`Prime`]s: arrows are pushed into conjunctive codomains, conjunctions are
//! flattened, and `forall` binders become de Bruijn indices.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::names::fresh_name;

/// Surface type syntax.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Type {
    Var(String),
    Arrow(Box<Type>, Box<Type>),
    Conj(Box<Type>, Box<Type>),
    Forall(String, Box<Type>),
}

impl Type {
    pub fn var(name: impl Into<String>) -> Self {
        Type::Var(name.into())
    }

    pub fn arrow(domain: Type, codomain: Type) -> Self {
        Type::Arrow(Box::new(domain), Box::new(codomain))
    }

    pub fn conj(left: Type, right: Type) -> Self {
        Type::Conj(Box::new(left), Box::new(right))
    }

    pub fn forall(binder: impl Into<String>, body: Type) -> Self {
        Type::Forall(binder.into(), Box::new(body))
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            Type::Var(_) => 1,
            Type::Arrow(a, b) | Type::Conj(a, b) => 1 + a.size() + b.size(),
            Type::Forall(_, b) => 1 + b.size(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        free_type_vars(self)
    }

    /// Every type variable name occurring in the type, bound or free.
    pub fn all_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Type::Var(x) => {
                out.insert(x.clone());
            }
            Type::Arrow(a, b) | Type::Conj(a, b) => {
                a.all_names(out);
                b.all_names(out);
            }
            Type::Forall(x, b) => {
                out.insert(x.clone());
                b.all_names(out);
            }
        }
    }

    pub fn canonical(&self) -> CanonicalType {
        canonicalize(self)
    }

    pub fn subst(&self, var: &str, replacement: &Type) -> Type {
        subst_type(self, var, replacement)
    }
}

/// A type that is not a conjunction at top level.
///
/// Variant order is the comparison order: bound indices sort before free
/// names, then arrows, then universals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prime {
    /// De Bruijn index counted from the innermost enclosing binder.
    Bound(u32),
    Free(String),
    /// Arrow whose codomain is prime; conjunctive codomains are distributed.
    Arrow(CanonicalType, Box<Prime>),
    /// Universal; the body is canonical but never split.
    Forall(CanonicalType),
}

/// Non-empty sorted multiset of primes.
///
/// The derived ordering compares the sorted sequences lexicographically, a
/// proper prefix sorting first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalType(Vec<Prime>);

impl CanonicalType {
    /// Sorts `primes` into canonical order. Panics on an empty input.
    pub fn from_primes(mut primes: Vec<Prime>) -> Self {
        assert!(!primes.is_empty(), "canonical types are non-empty");
        primes.sort();
        CanonicalType(primes)
    }

    pub fn singleton(prime: Prime) -> Self {
        CanonicalType(alloc::vec![prime])
    }

    pub fn primes(&self) -> &[Prime] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union, the type of a sum.
    pub fn union(&self, other: &CanonicalType) -> CanonicalType {
        let mut primes = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                primes.push(self.0[i].clone());
                i += 1;
            } else {
                primes.push(other.0[j].clone());
                j += 1;
            }
        }
        primes.extend_from_slice(&self.0[i..]);
        primes.extend_from_slice(&other.0[j..]);
        CanonicalType(primes)
    }

    /// Canonical form of `domain -> codomain`.
    pub fn arrow(domain: &CanonicalType, codomain: &CanonicalType) -> CanonicalType {
        // Codomain primes are sorted and arrows with a shared domain compare by
        // codomain, so the result is already in order.
        CanonicalType(
            codomain
                .0
                .iter()
                .map(|p| Prime::Arrow(domain.clone(), Box::new(p.clone())))
                .collect(),
        )
    }

    /// `Some(rest)` when `self` is `sub` plus a non-empty multiset `rest`.
    pub fn strict_remainder(&self, sub: &CanonicalType) -> Option<CanonicalType> {
        if sub.len() >= self.len() {
            return None;
        }
        let mut rest = Vec::with_capacity(self.len() - sub.len());
        let mut j = 0;
        for p in &self.0 {
            if j < sub.0.len() {
                match p.cmp(&sub.0[j]) {
                    Ordering::Equal => {
                        j += 1;
                        continue;
                    }
                    Ordering::Greater => return None,
                    Ordering::Less => {}
                }
            }
            rest.push(p.clone());
        }
        if j == sub.0.len() {
            Some(CanonicalType(rest))
        } else {
            None
        }
    }

    /// Is `sub` contained in `self` as a multiset (not necessarily strictly)?
    pub fn contains_multiset(&self, sub: &CanonicalType) -> bool {
        sub == self || self.strict_remainder(sub).is_some()
    }

    /// Free type variable names, at any depth.
    pub fn free_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        for p in &self.0 {
            p.collect_free(out);
        }
    }

    /// Reads the canonical form back as a right-nested conjunction of primes
    /// in sorted order, inventing binder names that avoid every free name.
    pub fn readback(&self) -> Type {
        let avoid = self.free_names();
        let mut scope = Vec::new();
        readback_canonical(self, &avoid, &mut scope)
    }
}

impl Prime {
    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            Prime::Bound(_) => {}
            Prime::Free(n) => {
                out.insert(n.clone());
            }
            Prime::Arrow(d, c) => {
                d.collect_free(out);
                c.collect_free(out);
            }
            Prime::Forall(b) => b.collect_free(out),
        }
    }
}

fn readback_canonical(c: &CanonicalType, avoid: &BTreeSet<String>, scope: &mut Vec<String>) -> Type {
    let mut parts: Vec<Type> = c.0.iter().map(|p| readback_prime(p, avoid, scope)).collect();
    let mut acc = parts.pop().expect("canonical types are non-empty");
    while let Some(left) = parts.pop() {
        acc = Type::conj(left, acc);
    }
    acc
}

fn readback_prime(p: &Prime, avoid: &BTreeSet<String>, scope: &mut Vec<String>) -> Type {
    match p {
        Prime::Bound(i) => {
            let i = *i as usize;
            let name = scope
                .len()
                .checked_sub(i + 1)
                .and_then(|k| scope.get(k))
                .expect("dangling de Bruijn index");
            Type::Var(name.clone())
        }
        Prime::Free(n) => Type::Var(n.clone()),
        Prime::Arrow(d, cod) => {
            Type::arrow(readback_canonical(d, avoid, scope), readback_prime(cod, avoid, scope))
        }
        Prime::Forall(body) => {
            let name = binder_name(scope.len(), |n| avoid.contains(n) || scope.iter().any(|s| s == n));
            scope.push(name.clone());
            let b = readback_canonical(body, avoid, scope);
            scope.pop();
            Type::forall(name, b)
        }
    }
}

fn binder_name(depth: usize, taken: impl Fn(&str) -> bool) -> String {
    const BASES: [&str; 4] = ["X", "Y", "Z", "W"];
    let base = BASES[depth % BASES.len()];
    fresh_name(base, taken)
}

/// Canonical form of a closed-over type (free variables stay named).
pub fn canonicalize(t: &Type) -> CanonicalType {
    canonicalize_under(t, &mut Vec::new())
}

/// Canonical form of `t` where the names in `scope` (innermost last) are
/// enclosing binders and become de Bruijn indices.
pub fn canonicalize_under<'a>(t: &'a Type, scope: &mut Vec<&'a str>) -> CanonicalType {
    match t {
        Type::Var(x) => {
            let prime = match scope.iter().rev().position(|n| *n == x.as_str()) {
                Some(i) => Prime::Bound(i as u32),
                None => Prime::Free(x.clone()),
            };
            CanonicalType::singleton(prime)
        }
        Type::Conj(a, b) => canonicalize_under(a, scope).union(&canonicalize_under(b, scope)),
        Type::Arrow(a, b) => {
            let dom = canonicalize_under(a, scope);
            let cod = canonicalize_under(b, scope);
            CanonicalType::arrow(&dom, &cod)
        }
        Type::Forall(x, b) => {
            scope.push(x.as_str());
            let body = canonicalize_under(b, scope);
            scope.pop();
            CanonicalType::singleton(Prime::Forall(body))
        }
    }
}

/// Total order on canonical types.
pub fn compare_canonical(a: &CanonicalType, b: &CanonicalType) -> Ordering {
    a.cmp(b)
}

pub fn type_equiv(a: &Type, b: &Type) -> bool {
    canonicalize(a) == canonicalize(b)
}

/// `c` is `dom -> B` for some `B` exactly when every prime of `c` is an arrow
/// out of `dom`; returns that `B`.
pub fn factor_arrow(c: &CanonicalType, dom: &CanonicalType) -> Option<CanonicalType> {
    let mut cods = Vec::with_capacity(c.len());
    for p in c.primes() {
        match p {
            Prime::Arrow(d, cod) if d == dom => cods.push((**cod).clone()),
            _ => return None,
        }
    }
    Some(CanonicalType::from_primes(cods))
}

/// `c` is `a & B` for some `B` exactly when `a` is a strict sub-multiset.
pub fn conj_remainder(c: &CanonicalType, a: &CanonicalType) -> Option<CanonicalType> {
    c.strict_remainder(a)
}

pub fn free_type_vars(t: &Type) -> BTreeSet<String> {
    fn go(t: &Type, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match t {
            Type::Var(x) => {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
            Type::Arrow(a, b) | Type::Conj(a, b) => {
                go(a, bound, out);
                go(b, bound, out);
            }
            Type::Forall(x, b) => {
                bound.push(x.clone());
                go(b, bound, out);
                bound.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

/// Capture-avoiding substitution `t[replacement/var]`.
pub fn subst_type(t: &Type, var: &str, replacement: &Type) -> Type {
    let repl_free = free_type_vars(replacement);
    subst_with(t, var, replacement, &repl_free)
}

fn subst_with(t: &Type, var: &str, repl: &Type, repl_free: &BTreeSet<String>) -> Type {
    match t {
        Type::Var(x) if x == var => repl.clone(),
        Type::Var(_) => t.clone(),
        Type::Arrow(a, b) => Type::arrow(subst_with(a, var, repl, repl_free), subst_with(b, var, repl, repl_free)),
        Type::Conj(a, b) => Type::conj(subst_with(a, var, repl, repl_free), subst_with(b, var, repl, repl_free)),
        Type::Forall(x, body) => {
            if x == var {
                return t.clone();
            }
            let body_free = free_type_vars(body);
            if !body_free.contains(var) {
                return t.clone();
            }
            if repl_free.contains(x) {
                let mut avoid = BTreeSet::new();
                body.all_names(&mut avoid);
                repl.all_names(&mut avoid);
                avoid.insert(String::from(var));
                let renamed = fresh_name(x, |n| avoid.contains(n));
                let body = subst_with(body, x, &Type::Var(renamed.clone()), &BTreeSet::from([renamed.clone()]));
                Type::forall(renamed, subst_with(&body, var, repl, repl_free))
            } else {
                Type::forall(x.clone(), subst_with(body, var, repl, repl_free))
            }
        }
    }
}
