//! Explicitly typed terms.
//!
//! Every variable occurrence carries its own annotation. An occurrence is
//! bound by the nearest enclosing `\x:A` with the same name and an
//! equivalent annotation; an occurrence `x:B` under `\x:A` with `B` not
//! equivalent to `A` is a different, free, variable.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::names::fresh_name;
use crate::types::{canonicalize, canonicalize_under, free_type_vars, CanonicalType, Type};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypedVar {
    pub name: String,
    pub ty: Type,
}

/// Identity of a typed variable: its name and canonical annotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarKey {
    pub name: String,
    pub ty: CanonicalType,
}

impl TypedVar {
    pub fn new(name: impl Into<String>, ty: Type) -> Self {
        TypedVar { name: name.into(), ty }
    }

    pub fn key(&self) -> VarKey {
        VarKey { name: self.name.clone(), ty: canonicalize(&self.ty) }
    }

    /// Same variable: equal names and equivalent annotations.
    pub fn same(&self, other: &TypedVar) -> bool {
        self.name == other.name && canonicalize(&self.ty) == canonicalize(&other.ty)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(TypedVar),
    Lam(TypedVar, Box<Term>),
    App(Box<Term>, Box<Term>),
    Sum(Box<Term>, Box<Term>),
    /// `pi[A](r)`, projection onto the type `A`.
    Proj(Type, Box<Term>),
    TLam(String, Box<Term>),
    TApp(Box<Term>, Type),
}

impl Term {
    pub fn var(name: impl Into<String>, ty: Type) -> Self {
        Term::Var(TypedVar::new(name, ty))
    }

    pub fn lam(name: impl Into<String>, ty: Type, body: Term) -> Self {
        Term::Lam(TypedVar::new(name, ty), Box::new(body))
    }

    pub fn app(fun: Term, arg: Term) -> Self {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn sum(left: Term, right: Term) -> Self {
        Term::Sum(Box::new(left), Box::new(right))
    }

    pub fn proj(target: Type, body: Term) -> Self {
        Term::Proj(target, Box::new(body))
    }

    pub fn tlam(binder: impl Into<String>, body: Term) -> Self {
        Term::TLam(binder.into(), Box::new(body))
    }

    pub fn tapp(fun: Term, arg: Type) -> Self {
        Term::TApp(Box::new(fun), arg)
    }

    /// Left-nested sum of `summands`. Panics when empty.
    pub fn sum_of(summands: impl IntoIterator<Item = Term>) -> Term {
        let mut it = summands.into_iter();
        let first = it.next().expect("a sum needs at least one summand");
        it.fold(first, Term::sum)
    }

    /// Summands of the maximal `+` tree at the root, left to right.
    pub fn summands(&self) -> Vec<&Term> {
        fn go<'a>(t: &'a Term, out: &mut Vec<&'a Term>) {
            match t {
                Term::Sum(l, r) => {
                    go(l, out);
                    go(r, out);
                }
                _ => out.push(t),
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    /// Number of term constructors (annotations not counted).
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Lam(_, b) | Term::Proj(_, b) | Term::TLam(_, b) | Term::TApp(b, _) => 1 + b.size(),
            Term::App(f, a) | Term::Sum(f, a) => 1 + f.size() + a.size(),
        }
    }

    pub fn contains_proj(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Proj(..) => true,
            Term::Lam(_, b) | Term::TLam(_, b) | Term::TApp(b, _) => b.contains_proj(),
            Term::App(f, a) | Term::Sum(f, a) => f.contains_proj() || a.contains_proj(),
        }
    }

    fn term_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.name.clone());
            }
            Term::Lam(v, b) => {
                out.insert(v.name.clone());
                b.term_names(out);
            }
            Term::App(f, a) | Term::Sum(f, a) => {
                f.term_names(out);
                a.term_names(out);
            }
            Term::Proj(_, b) | Term::TLam(_, b) | Term::TApp(b, _) => b.term_names(out),
        }
    }

    /// Every type variable name in any annotation or binder, bound or free.
    pub fn type_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => v.ty.all_names(out),
            Term::Lam(v, b) => {
                v.ty.all_names(out);
                b.type_names(out);
            }
            Term::App(f, a) | Term::Sum(f, a) => {
                f.type_names(out);
                a.type_names(out);
            }
            Term::Proj(t, b) | Term::TApp(b, t) => {
                t.all_names(out);
                b.type_names(out);
            }
            Term::TLam(x, b) => {
                out.insert(x.clone());
                b.type_names(out);
            }
        }
    }
}

/// Enclosing binders while walking a term, innermost last.
#[derive(Clone, Debug)]
pub(crate) enum Binder<'a> {
    Term(VarKey),
    Type(&'a str),
}

/// Position among enclosing term binders (0 = innermost) of the binder that
/// captures `occurrence`, or `None` when the occurrence is free.
pub(crate) fn resolve(occurrence: &TypedVar, key: &VarKey, scope: &[Binder<'_>]) -> Option<u32> {
    let mut ftv: Option<BTreeSet<String>> = None;
    let mut index = 0u32;
    for b in scope.iter().rev() {
        match b {
            Binder::Type(x) => {
                // A type binder that captures a type variable of the annotation
                // separates the occurrence from every outer term binder.
                let ftv = ftv.get_or_insert_with(|| free_type_vars(&occurrence.ty));
                if ftv.contains(*x) {
                    return None;
                }
            }
            Binder::Term(bk) => {
                if bk == key {
                    return Some(index);
                }
                index += 1;
            }
        }
    }
    None
}

fn free_occurrences<'a>(t: &'a Term, scope: &mut Vec<Binder<'a>>, out: &mut Vec<(VarKey, &'a TypedVar)>) {
    match t {
        Term::Var(v) => {
            let key = v.key();
            if resolve(v, &key, scope).is_none() && !out.iter().any(|(k, _)| *k == key) {
                out.push((key, v));
            }
        }
        Term::Lam(v, b) => {
            scope.push(Binder::Term(v.key()));
            free_occurrences(b, scope, out);
            scope.pop();
        }
        Term::App(f, a) | Term::Sum(f, a) => {
            free_occurrences(f, scope, out);
            free_occurrences(a, scope, out);
        }
        Term::Proj(_, b) | Term::TApp(b, _) => free_occurrences(b, scope, out),
        Term::TLam(x, b) => {
            scope.push(Binder::Type(x));
            free_occurrences(b, scope, out);
            scope.pop();
        }
    }
}

/// Free variables with one representative occurrence each.
pub fn free_var_occurrences(r: &Term) -> Vec<TypedVar> {
    let mut out = Vec::new();
    free_occurrences(r, &mut Vec::new(), &mut out);
    out.into_iter().map(|(_, v)| v.clone()).collect()
}

pub fn free_vars(r: &Term) -> BTreeSet<VarKey> {
    let mut out = Vec::new();
    free_occurrences(r, &mut Vec::new(), &mut out);
    out.into_iter().map(|(k, _)| k).collect()
}

/// Canonical types of the free variables.
pub fn type_env(r: &Term) -> BTreeSet<CanonicalType> {
    free_vars(r).into_iter().map(|k| k.ty).collect()
}

/// Free type variables of a term: those of every annotation, minus `/\`-bound ones.
pub fn free_type_vars_of_term(r: &Term) -> BTreeSet<String> {
    fn go(t: &Term, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut add = |ty: &Type, bound: &Vec<String>| {
            for x in free_type_vars(ty) {
                if !bound.contains(&x) {
                    out.insert(x);
                }
            }
        };
        match t {
            Term::Var(v) => add(&v.ty, bound),
            Term::Lam(v, b) => {
                add(&v.ty, bound);
                go(b, bound, out);
            }
            Term::App(f, a) | Term::Sum(f, a) => {
                go(f, bound, out);
                go(a, bound, out);
            }
            Term::Proj(ty, b) | Term::TApp(b, ty) => {
                add(ty, bound);
                go(b, bound, out);
            }
            Term::TLam(x, b) => {
                bound.push(x.clone());
                go(b, bound, out);
                bound.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(r, &mut Vec::new(), &mut out);
    out
}

fn occurs_free(t: &Term, x: &VarKey, x_ftv: &BTreeSet<String>) -> bool {
    match t {
        Term::Var(v) => v.name == x.name && canonicalize(&v.ty) == x.ty,
        Term::Lam(v, b) => !(v.name == x.name && canonicalize(&v.ty) == x.ty) && occurs_free(b, x, x_ftv),
        Term::App(f, a) | Term::Sum(f, a) => occurs_free(f, x, x_ftv) || occurs_free(a, x, x_ftv),
        Term::Proj(_, b) | Term::TApp(b, _) => occurs_free(b, x, x_ftv),
        Term::TLam(y, b) => !x_ftv.contains(y) && occurs_free(b, x, x_ftv),
    }
}

/// Capture-avoiding `r[s/x]`.
pub fn subst_term(r: &Term, x: &TypedVar, s: &Term) -> Term {
    let mut term_avoid = BTreeSet::new();
    r.term_names(&mut term_avoid);
    s.term_names(&mut term_avoid);
    term_avoid.insert(x.name.clone());
    let mut type_avoid = BTreeSet::new();
    r.type_names(&mut type_avoid);
    s.type_names(&mut type_avoid);
    x.ty.all_names(&mut type_avoid);
    let mut cx = SubstTerm {
        key: x.key(),
        x_ftv: free_type_vars(&x.ty),
        s,
        s_free: free_vars(s),
        s_ftv: free_type_vars_of_term(s),
        term_avoid,
        type_avoid,
    };
    cx.go(r)
}

struct SubstTerm<'s> {
    key: VarKey,
    x_ftv: BTreeSet<String>,
    s: &'s Term,
    s_free: BTreeSet<VarKey>,
    s_ftv: BTreeSet<String>,
    term_avoid: BTreeSet<String>,
    type_avoid: BTreeSet<String>,
}

impl SubstTerm<'_> {
    fn go(&mut self, t: &Term) -> Term {
        match t {
            Term::Var(v) => {
                if v.name == self.key.name && canonicalize(&v.ty) == self.key.ty {
                    self.s.clone()
                } else {
                    t.clone()
                }
            }
            Term::Lam(v, b) => {
                let vk = v.key();
                if vk == self.key || !occurs_free(b, &self.key, &self.x_ftv) {
                    return t.clone();
                }
                if self.s_free.contains(&vk) {
                    let renamed = fresh_name(&v.name, |n| self.term_avoid.contains(n));
                    self.term_avoid.insert(renamed.clone());
                    let fresh = TypedVar::new(renamed, v.ty.clone());
                    let body = subst_term(b, v, &Term::Var(fresh.clone()));
                    Term::Lam(fresh, Box::new(self.go(&body)))
                } else {
                    Term::Lam(v.clone(), Box::new(self.go(b)))
                }
            }
            Term::App(f, a) => Term::app(self.go(f), self.go(a)),
            Term::Sum(l, r) => Term::sum(self.go(l), self.go(r)),
            Term::Proj(ty, b) => Term::proj(ty.clone(), self.go(b)),
            Term::TApp(f, ty) => Term::tapp(self.go(f), ty.clone()),
            Term::TLam(y, b) => {
                if self.x_ftv.contains(y) || !occurs_free(b, &self.key, &self.x_ftv) {
                    return t.clone();
                }
                if self.s_ftv.contains(y) {
                    let renamed = fresh_name(y, |n| self.type_avoid.contains(n));
                    self.type_avoid.insert(renamed.clone());
                    let body = subst_type_in_term(b, y, &Type::Var(renamed.clone()));
                    Term::TLam(renamed, Box::new(self.go(&body)))
                } else {
                    Term::TLam(y.clone(), Box::new(self.go(b)))
                }
            }
        }
    }
}

/// Capture-avoiding `r[B/X]`: substitutes into every annotation.
pub fn subst_type_in_term(r: &Term, var: &str, replacement: &Type) -> Term {
    let mut term_avoid = BTreeSet::new();
    r.term_names(&mut term_avoid);
    let mut type_avoid = BTreeSet::new();
    r.type_names(&mut type_avoid);
    replacement.all_names(&mut type_avoid);
    type_avoid.insert(String::from(var));
    let mut cx = SubstType {
        var,
        replacement,
        repl_ftv: free_type_vars(replacement),
        term_avoid,
        type_avoid,
    };
    cx.go(r)
}

struct SubstType<'a> {
    var: &'a str,
    replacement: &'a Type,
    repl_ftv: BTreeSet<String>,
    term_avoid: BTreeSet<String>,
    type_avoid: BTreeSet<String>,
}

impl SubstType<'_> {
    fn ty(&self, t: &Type) -> Type {
        t.subst(self.var, self.replacement)
    }

    fn go(&mut self, t: &Term) -> Term {
        match t {
            Term::Var(v) => Term::Var(TypedVar::new(v.name.clone(), self.ty(&v.ty))),
            Term::Lam(v, b) => {
                let new_ty = self.ty(&v.ty);
                let new_key = canonicalize(&new_ty);
                let vk = v.key();
                // A free occurrence with the binder's name whose annotation
                // becomes equivalent to the binder's would be captured.
                let captures = free_var_occurrences(b).into_iter().any(|o| {
                    o.name == v.name && canonicalize(&o.ty) != vk.ty && canonicalize(&self.ty(&o.ty)) == new_key
                });
                if captures {
                    let renamed = fresh_name(&v.name, |n| self.term_avoid.contains(n));
                    self.term_avoid.insert(renamed.clone());
                    let body = subst_term(b, v, &Term::var(renamed.clone(), v.ty.clone()));
                    Term::Lam(TypedVar::new(renamed, new_ty), Box::new(self.go(&body)))
                } else {
                    Term::Lam(TypedVar::new(v.name.clone(), new_ty), Box::new(self.go(b)))
                }
            }
            Term::App(f, a) => Term::app(self.go(f), self.go(a)),
            Term::Sum(l, r) => Term::sum(self.go(l), self.go(r)),
            Term::Proj(ty, b) => Term::proj(self.ty(ty), self.go(b)),
            Term::TApp(f, ty) => Term::tapp(self.go(f), self.ty(ty)),
            Term::TLam(y, b) => {
                if y == self.var || !free_type_vars_of_term(b).contains(self.var) {
                    return t.clone();
                }
                if self.repl_ftv.contains(y) {
                    let renamed = fresh_name(y, |n| self.type_avoid.contains(n));
                    self.type_avoid.insert(renamed.clone());
                    let body = subst_type_in_term(b, y, &Type::Var(renamed.clone()));
                    Term::TLam(renamed, Box::new(self.go(&body)))
                } else {
                    Term::TLam(y.clone(), Box::new(self.go(b)))
                }
            }
        }
    }
}

/// Name-free rendering of a term. Equal keys mean alpha-equivalent terms
/// with equivalent annotations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TermKey {
    Bound(u32),
    Free(String, CanonicalType),
    Lam(CanonicalType, Box<TermKey>),
    App(Box<TermKey>, Box<TermKey>),
    /// Summands; binary for alpha keys, flattened and sorted for structural keys.
    Sum(Vec<TermKey>),
    Proj(CanonicalType, Box<TermKey>),
    TLam(Box<TermKey>),
    TApp(Box<TermKey>, CanonicalType),
}

pub(crate) struct KeyBuilder<'a> {
    pub(crate) scope: Vec<Binder<'a>>,
    pub(crate) type_scope: Vec<&'a str>,
    /// Flatten and sort sums (structural keys) instead of keeping them binary.
    pub(crate) ac: bool,
}

impl<'a> KeyBuilder<'a> {
    pub(crate) fn new(ac: bool) -> Self {
        KeyBuilder { scope: Vec::new(), type_scope: Vec::new(), ac }
    }

    fn ty(&mut self, t: &'a Type) -> CanonicalType {
        canonicalize_under(t, &mut self.type_scope)
    }

    pub(crate) fn key(&mut self, t: &'a Term) -> TermKey {
        match t {
            Term::Var(v) => {
                let vk = v.key();
                match resolve(v, &vk, &self.scope) {
                    Some(i) => TermKey::Bound(i),
                    None => TermKey::Free(v.name.clone(), self.ty(&v.ty)),
                }
            }
            Term::Lam(v, b) => {
                let ann = self.ty(&v.ty);
                self.scope.push(Binder::Term(v.key()));
                let body = self.key(b);
                self.scope.pop();
                TermKey::Lam(ann, Box::new(body))
            }
            Term::App(f, a) => TermKey::App(Box::new(self.key(f)), Box::new(self.key(a))),
            Term::Sum(l, r) => {
                if self.ac {
                    let mut keys: Vec<TermKey> = t.summands().into_iter().map(|s| self.key(s)).collect();
                    keys.sort();
                    TermKey::Sum(keys)
                } else {
                    TermKey::Sum(alloc::vec![self.key(l), self.key(r)])
                }
            }
            Term::Proj(ty, b) => {
                let ann = self.ty(ty);
                TermKey::Proj(ann, Box::new(self.key(b)))
            }
            Term::TLam(x, b) => {
                self.scope.push(Binder::Type(x));
                self.type_scope.push(x);
                let body = self.key(b);
                self.type_scope.pop();
                self.scope.pop();
                TermKey::TLam(Box::new(body))
            }
            Term::TApp(f, ty) => {
                let fk = self.key(f);
                TermKey::TApp(Box::new(fk), self.ty(ty))
            }
        }
    }
}

impl<'a> KeyBuilder<'a> {
    /// Rebuilds `t` with every sum reordered by structural key, returning the
    /// rebuilt term together with its structural key.
    pub(crate) fn arrange(&mut self, t: &'a Term) -> (Term, TermKey) {
        debug_assert!(self.ac);
        match t {
            Term::Var(_) => (t.clone(), self.key(t)),
            Term::Lam(v, b) => {
                let ann = self.ty(&v.ty);
                self.scope.push(Binder::Term(v.key()));
                let (body, bk) = self.arrange(b);
                self.scope.pop();
                (Term::Lam(v.clone(), Box::new(body)), TermKey::Lam(ann, Box::new(bk)))
            }
            Term::App(f, a) => {
                let (f, fk) = self.arrange(f);
                let (a, ak) = self.arrange(a);
                (Term::app(f, a), TermKey::App(Box::new(fk), Box::new(ak)))
            }
            Term::Sum(..) => {
                let mut parts: Vec<(Term, TermKey)> = t.summands().into_iter().map(|s| self.arrange(s)).collect();
                parts.sort_by(|x, y| x.1.cmp(&y.1));
                let (terms, keys): (Vec<Term>, Vec<TermKey>) = parts.into_iter().unzip();
                (Term::sum_of(terms), TermKey::Sum(keys))
            }
            Term::Proj(ty, b) => {
                let ann = self.ty(ty);
                let (body, bk) = self.arrange(b);
                (Term::proj(ty.clone(), body), TermKey::Proj(ann, Box::new(bk)))
            }
            Term::TLam(x, b) => {
                self.scope.push(Binder::Type(x));
                self.type_scope.push(x);
                let (body, bk) = self.arrange(b);
                self.type_scope.pop();
                self.scope.pop();
                (Term::TLam(x.clone(), Box::new(body)), TermKey::TLam(Box::new(bk)))
            }
            Term::TApp(f, ty) => {
                let (f, fk) = self.arrange(f);
                let tk = self.ty(ty);
                (Term::tapp(f, ty.clone()), TermKey::TApp(Box::new(fk), tk))
            }
        }
    }
}

/// Key of `r` modulo alpha-conversion, equivalence of annotations, and
/// associativity and commutativity of `+`.
pub fn structural_key(r: &Term) -> TermKey {
    KeyBuilder::new(true).key(r)
}

pub fn alpha_key(r: &Term) -> TermKey {
    KeyBuilder::new(false).key(r)
}

pub fn alpha_eq(r: &Term, s: &Term) -> bool {
    alpha_key(r) == alpha_key(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Type {
        Type::var("A")
    }
    fn b() -> Type {
        Type::var("B")
    }

    #[test]
    fn free_vars_of_application() {
        let t = Term::app(Term::var("x", a()), Term::var("y", b()));
        let fv = free_vars(&t);
        assert_eq!(fv.len(), 2);
        assert!(fv.contains(&TypedVar::new("x", a()).key()));
        assert!(fv.contains(&TypedVar::new("y", b()).key()));
    }

    #[test]
    fn differently_typed_occurrence_is_free() {
        let t = Term::lam("x", a(), Term::var("x", b()));
        assert_eq!(free_vars(&t), BTreeSet::from([TypedVar::new("x", b()).key()]));
        let closed = Term::lam("x", a(), Term::var("x", a()));
        assert!(free_vars(&closed).is_empty());
        assert!(type_env(&closed).is_empty());
    }

    #[test]
    fn type_env_is_canonical() {
        let l = Term::var("x", Type::conj(a(), b()));
        let r = Term::var("x", Type::conj(b(), a()));
        assert_eq!(type_env(&l), type_env(&r));
        let t = Term::app(Term::var("x", a()), Term::var("y", b()));
        assert_eq!(type_env(&t), BTreeSet::from([canonicalize(&a()), canonicalize(&b())]));
    }

    #[test]
    fn substitution_basics() {
        let x = TypedVar::new("x", a());
        let s = Term::var("s", b());
        assert_eq!(subst_term(&Term::Var(x.clone()), &x, &s), s);

        let t = Term::sum(Term::var("x", a()), Term::var("x", b()));
        assert_eq!(subst_term(&t, &x, &s), Term::sum(s.clone(), Term::var("x", b())));
    }

    #[test]
    fn substitution_avoids_capture() {
        let x = TypedVar::new("x", a());
        let t = Term::lam("y", b(), Term::var("x", a()));
        let got = subst_term(&t, &x, &Term::var("y", b()));
        assert_eq!(got, Term::lam("y'", b(), Term::var("y", b())));
    }

    #[test]
    fn substitution_stops_at_shadowing_binder() {
        let x = TypedVar::new("x", a());
        let t = Term::lam("x", a(), Term::var("x", a()));
        assert_eq!(subst_term(&t, &x, &Term::var("z", a())), t);
        // a type binder capturing the annotation makes it a different variable
        let xv = TypedVar::new("x", Type::var("X"));
        let t = Term::tlam("X", Term::var("x", Type::var("X")));
        assert_eq!(subst_term(&t, &xv, &Term::var("z", Type::var("X"))), t);
    }

    #[test]
    fn type_substitution() {
        let x = Type::var("X");
        assert_eq!(subst_type_in_term(&Term::var("x", x.clone()), "X", &b()), Term::var("x", b()));
        let id = Term::lam("x", x.clone(), Term::var("x", x.clone()));
        assert_eq!(subst_type_in_term(&id, "X", &b()), Term::lam("x", b(), Term::var("x", b())));
        let t = Term::tlam("X", Term::var("x", x.clone()));
        assert_eq!(subst_type_in_term(&t, "X", &a()), t);
        let p = Term::proj(x.clone(), Term::var("x", Type::conj(x.clone(), b())));
        assert_eq!(
            subst_type_in_term(&p, "X", &a()),
            Term::proj(a(), Term::var("x", Type::conj(a(), b())))
        );
    }

    #[test]
    fn type_substitution_does_not_merge_variables() {
        // \x:X. x:Y  with Y := X must stay a constant function
        let t = Term::lam("x", Type::var("X"), Term::var("x", Type::var("Y")));
        let got = subst_type_in_term(&t, "Y", &Type::var("X"));
        assert_eq!(got, Term::lam("x'", Type::var("X"), Term::var("x", Type::var("X"))));
        assert_eq!(free_vars(&got).len(), 1);
    }

    #[test]
    fn type_substitution_renames_type_binder() {
        // /\Y. x:(X -> Y)  with X := Y
        let t = Term::tlam("Y", Term::var("x", Type::arrow(Type::var("X"), Type::var("Y"))));
        let got = subst_type_in_term(&t, "X", &Type::var("Y"));
        assert_eq!(
            got,
            Term::tlam("Y'", Term::var("x", Type::arrow(Type::var("Y"), Type::var("Y'"))))
        );
    }

    #[test]
    fn alpha_equivalence() {
        let l = Term::lam("x", a(), Term::var("x", a()));
        let r = Term::lam("y", a(), Term::var("y", a()));
        assert!(alpha_eq(&l, &r));
        let ab = Term::lam("x", Type::conj(a(), b()), Term::var("x", Type::conj(a(), b())));
        let ba = Term::lam("x", Type::conj(b(), a()), Term::var("x", Type::conj(b(), a())));
        assert!(alpha_eq(&ab, &ba));
        let lb = Term::lam("x", b(), Term::var("x", b()));
        assert!(!alpha_eq(&l, &lb));
        let t1 = Term::tlam("X", Term::lam("x", Type::var("X"), Term::var("x", Type::var("X"))));
        let t2 = Term::tlam("Y", Term::lam("z", Type::var("Y"), Term::var("z", Type::var("Y"))));
        assert!(alpha_eq(&t1, &t2));
    }

    #[test]
    fn alpha_keys_keep_sum_order() {
        let x = Term::var("x", a());
        let y = Term::var("y", a());
        assert!(!alpha_eq(&Term::sum(x.clone(), y.clone()), &Term::sum(y, x)));
    }
}
