#![allow(dead_code)]

pub mod type_axioms;

use lpl_core::Type;
use proptest::prelude::*;

pub fn pool() -> Vec<Type> {
    vec![
        Type::var("A"),
        Type::var("B"),
        Type::arrow(Type::var("A"), Type::var("B")),
        Type::conj(Type::var("A"), Type::var("B")),
    ]
}

/// Types over `A`, `B`, `X`, `Y`, with universals binding `X` or `Y`.
pub fn arb_type() -> impl Strategy<Value = Type> {
    let leaf = prop::sample::select(vec!["A", "B", "X", "Y"]).prop_map(Type::var);
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Type::arrow(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Type::conj(a, b)),
            (prop::sample::select(vec!["X", "Y"]), inner).prop_map(|(x, b)| Type::forall(x, b)),
        ]
    })
}

/// `t` with one random axiom step applied somewhere, when one applies.
pub fn perturb(t: &Type, pick: usize) -> Type {
    let n = type_axioms::neighbours(t);
    if n.is_empty() {
        t.clone()
    } else {
        n[pick % n.len()].clone()
    }
}
