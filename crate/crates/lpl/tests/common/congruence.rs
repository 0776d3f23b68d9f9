//! Single instances of the structural congruence axioms, in either
//! direction and at any position.

use lpl_core::{canonicalize, conj_remainder, factor_arrow, infer, Term, Type};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    Commute,
    AssocLeft,
    AssocRight,
    AppDistribute,
    AppCollect,
    LamDistribute,
    LamCollect,
    ProjInto,
    ProjOut,
}

pub const ALL_AXIOMS: [Axiom; 9] = [
    Axiom::Commute,
    Axiom::AssocLeft,
    Axiom::AssocRight,
    Axiom::AppDistribute,
    Axiom::AppCollect,
    Axiom::LamDistribute,
    Axiom::LamCollect,
    Axiom::ProjInto,
    Axiom::ProjOut,
];

fn root_steps(t: &Term, out: &mut Vec<(Axiom, Term)>) {
    match t {
        Term::Sum(a, b) => {
            out.push((Axiom::Commute, Term::sum((**b).clone(), (**a).clone())));
            if let Term::Sum(a1, a2) = &**a {
                out.push((Axiom::AssocRight, Term::sum((**a1).clone(), Term::sum((**a2).clone(), (**b).clone()))));
            }
            if let Term::Sum(b1, b2) = &**b {
                out.push((Axiom::AssocLeft, Term::sum(Term::sum((**a).clone(), (**b1).clone()), (**b2).clone())));
            }
            if let (Term::App(r, t1), Term::App(s, t2)) = (&**a, &**b) {
                if t1 == t2 {
                    out.push((Axiom::AppCollect, Term::app(Term::sum((**r).clone(), (**s).clone()), (**t1).clone())));
                }
            }
            if let (Term::Lam(x, r), Term::Lam(y, s)) = (&**a, &**b) {
                if x == y {
                    out.push((Axiom::LamCollect, Term::Lam(x.clone(), Box::new(Term::sum((**r).clone(), (**s).clone())))));
                }
            }
        }
        Term::App(f, arg) => {
            if let Term::Sum(r, s) = &**f {
                out.push((
                    Axiom::AppDistribute,
                    Term::sum(Term::app((**r).clone(), (**arg).clone()), Term::app((**s).clone(), (**arg).clone())),
                ));
            }
            // pi[A -> B](r) s  into  pi[B](r s), when r : A -> (B & C).
            if let Term::Proj(Type::Arrow(_, cod), r) = &**f {
                let (rt, at) = (infer(r).unwrap(), infer(arg).unwrap());
                if factor_arrow(&rt, &at).is_some() {
                    out.push((Axiom::ProjInto, Term::proj((**cod).clone(), Term::app((**r).clone(), (**arg).clone()))));
                }
            }
        }
        Term::Lam(x, body) => {
            if let Term::Sum(r, s) = &**body {
                out.push((
                    Axiom::LamDistribute,
                    Term::sum(Term::Lam(x.clone(), r.clone()), Term::Lam(x.clone(), s.clone())),
                ));
            }
        }
        Term::Proj(target, body) => {
            // pi[B](r s)  out to  pi[A -> B](r) s, when r : A -> (B & C).
            if let Term::App(r, s) = &**body {
                let (rt, st) = (infer(r).unwrap(), infer(s).unwrap());
                let strict = factor_arrow(&rt, &st).and_then(|cod| conj_remainder(&cod, &canonicalize(target)));
                if strict.is_some() {
                    let dom = st.readback();
                    out.push((
                        Axiom::ProjOut,
                        Term::app(Term::proj(Type::arrow(dom, target.clone()), (**r).clone()), (**s).clone()),
                    ));
                }
            }
        }
        _ => {}
    }
}

/// Every term one axiom instance away from `t`.
pub fn neighbours(t: &Term) -> Vec<(Axiom, Term)> {
    let mut out = Vec::new();
    root_steps(t, &mut out);
    let wrap = |out: &mut Vec<(Axiom, Term)>, inner: &Term, rebuild: &dyn Fn(Term) -> Term| {
        for (ax, n) in neighbours(inner) {
            out.push((ax, rebuild(n)));
        }
    };
    match t {
        Term::Var(_) => {}
        Term::Lam(x, b) => wrap(&mut out, b, &|n| Term::Lam(x.clone(), Box::new(n))),
        Term::App(f, a) => {
            wrap(&mut out, f, &|n| Term::app(n, (**a).clone()));
            wrap(&mut out, a, &|n| Term::app((**f).clone(), n));
        }
        Term::Sum(l, r) => {
            wrap(&mut out, l, &|n| Term::sum(n, (**r).clone()));
            wrap(&mut out, r, &|n| Term::sum((**l).clone(), n));
        }
        Term::Proj(ty, b) => wrap(&mut out, b, &|n| Term::proj(ty.clone(), n)),
        Term::TLam(x, b) => wrap(&mut out, b, &|n| Term::tlam(x.clone(), n)),
        Term::TApp(f, ty) => wrap(&mut out, f, &|n| Term::tapp(n, ty.clone())),
    }
    out
}
