#![allow(dead_code)]

#[path = "../../../core/tests/common/type_axioms.rs"]
pub mod type_axioms;

pub mod congruence;

use std::cell::Cell;

use lpl_core::{subst_term, subst_type_in_term, Term, Type, TypedVar};

pub fn pool() -> Vec<Type> {
    vec![
        Type::var("A"),
        Type::var("B"),
        Type::arrow(Type::var("A"), Type::var("B")),
        Type::conj(Type::var("A"), Type::var("B")),
    ]
}

thread_local! {
    static FRESH: Cell<usize> = const { Cell::new(0) };
}

fn fresh(base: &str) -> String {
    FRESH.with(|c| {
        c.set(c.get() + 1);
        format!("{}_{}", base, c.get())
    })
}

/// Renames every term and type binder of `t` to a globally fresh name.
pub fn rename_binders(t: &Term) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::Lam(v, b) => {
            let w = TypedVar::new(fresh(&v.name), v.ty.clone());
            let body = subst_term(&rename_binders(b), v, &Term::Var(w.clone()));
            Term::Lam(w, Box::new(body))
        }
        Term::App(f, a) => Term::app(rename_binders(f), rename_binders(a)),
        Term::Sum(l, r) => Term::sum(rename_binders(l), rename_binders(r)),
        Term::Proj(ty, b) => Term::proj(ty.clone(), rename_binders(b)),
        Term::TLam(x, b) => {
            let y = fresh(x);
            Term::tlam(y.clone(), subst_type_in_term(&rename_binders(b), x, &Type::var(y)))
        }
        Term::TApp(f, ty) => Term::tapp(rename_binders(f), ty.clone()),
    }
}
