//! Syntax-directed type checking.
//!
//! The checker works on canonical types only, so equivalence never has to be
//! searched for: every well-typed term has exactly one canonical type.

use alloc::boxed::Box;
use core::fmt;

use crate::types::{canonicalize, conj_remainder, factor_arrow, CanonicalType, Prime, Type};
use crate::term::{type_env, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeErrorKind {
    /// The head of an application has a non-arrow prime.
    NotAnArrow,
    /// The head is a conjunction of arrows but not all out of the argument's type.
    DomainMismatch,
    /// `pi[A](r)` where `A` is not a strict part of the type of `r`.
    NotAConjunctionContaining,
    /// `/\X. r` where `X` is free in the type of a free variable of `r`.
    EscapingTypeVariable,
    /// `r {B}` where `r` is not a single universal.
    NotUniversal,
}

impl TypeErrorKind {
    /// Stable machine-readable code.
    pub fn code(self) -> &'static str {
        match self {
            TypeErrorKind::NotAnArrow => "NotAnArrow",
            TypeErrorKind::DomainMismatch => "DomainMismatch",
            TypeErrorKind::NotAConjunctionContaining => "NotAConjunctionContaining",
            TypeErrorKind::EscapingTypeVariable => "EscapingTypeVariable",
            TypeErrorKind::NotUniversal => "NotUniversal",
        }
    }
}

impl fmt::Display for TypeErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeError {
    pub kind: TypeErrorKind,
    /// The subterm whose rule failed.
    pub term: Box<Term>,
    /// Type of the principal premise: the head, the projected body, or the
    /// body under the type binder.
    pub found: CanonicalType,
    /// The other type involved: argument type, projection target, or the
    /// type variable (as a singleton) in the escaping case.
    pub expected: CanonicalType,
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let found = self.found.readback();
        let expected = self.expected.readback();
        match self.kind {
            TypeErrorKind::NotAnArrow => write!(
                f,
                "{}: `{}` has type `{}`, which is not a function from `{}`",
                self.kind, self.term, found, expected
            ),
            TypeErrorKind::DomainMismatch => write!(
                f,
                "{}: in `{}`, the function has type `{}` but the argument has type `{}`",
                self.kind, self.term, found, expected
            ),
            TypeErrorKind::NotAConjunctionContaining => write!(
                f,
                "{}: in `{}`, the body has type `{}`, which has no part `{}` with a non-empty remainder",
                self.kind, self.term, found, expected
            ),
            TypeErrorKind::EscapingTypeVariable => write!(
                f,
                "{}: in `{}`, type variable `{}` occurs free in the type of a free variable",
                self.kind, self.term, expected
            ),
            TypeErrorKind::NotUniversal => write!(
                f,
                "{}: in `{}`, the function has type `{}`, which is not a universal type",
                self.kind, self.term, found
            ),
        }
    }
}

impl core::error::Error for TypeError {}

/// The unique canonical type of `r`.
pub fn infer(r: &Term) -> Result<CanonicalType, TypeError> {
    match r {
        Term::Var(v) => Ok(canonicalize(&v.ty)),
        Term::Lam(v, body) => {
            let dom = canonicalize(&v.ty);
            let cod = infer(body)?;
            Ok(CanonicalType::arrow(&dom, &cod))
        }
        Term::App(fun, arg) => {
            let ft = infer(fun)?;
            let at = infer(arg)?;
            match factor_arrow(&ft, &at) {
                Some(cod) => Ok(cod),
                None => {
                    let all_arrows = ft.primes().iter().all(|p| matches!(p, Prime::Arrow(..)));
                    let kind = if all_arrows { TypeErrorKind::DomainMismatch } else { TypeErrorKind::NotAnArrow };
                    Err(TypeError { kind, term: Box::new(r.clone()), found: ft, expected: at })
                }
            }
        }
        Term::Sum(l, rr) => Ok(infer(l)?.union(&infer(rr)?)),
        Term::Proj(target, body) => {
            let bt = infer(body)?;
            let tt = canonicalize(target);
            if conj_remainder(&bt, &tt).is_some() {
                Ok(tt)
            } else {
                Err(TypeError {
                    kind: TypeErrorKind::NotAConjunctionContaining,
                    term: Box::new(r.clone()),
                    found: bt,
                    expected: tt,
                })
            }
        }
        Term::TLam(x, body) => {
            let bt = infer(body)?;
            if type_env(body).iter().any(|t| t.free_names().contains(x)) {
                return Err(TypeError {
                    kind: TypeErrorKind::EscapingTypeVariable,
                    term: Box::new(r.clone()),
                    found: bt,
                    expected: canonicalize(&Type::Var(x.clone())),
                });
            }
            Ok(canonicalize(&Type::forall(x.clone(), bt.readback())))
        }
        Term::TApp(fun, arg) => {
            let ft = infer(fun)?;
            match ft.primes() {
                [Prime::Forall(_)] => match ft.readback() {
                    Type::Forall(x, body) => Ok(canonicalize(&body.subst(&x, arg))),
                    _ => unreachable!("read-back of a universal prime is a universal"),
                },
                _ => Err(TypeError {
                    kind: TypeErrorKind::NotUniversal,
                    term: Box::new(r.clone()),
                    found: ft,
                    expected: canonicalize(arg),
                }),
            }
        }
    }
}

pub fn is_well_typed(r: &Term) -> bool {
    infer(r).is_ok()
}
