//! One-step rewriting by the three type isomorphisms, in both directions and
//! under every context, and the breadth-first closure it generates.

use std::collections::{BTreeSet, VecDeque};

use lpl_core::Type;

/// Types reachable from `t` by one axiom instance at one position.
pub fn neighbours(t: &Type) -> Vec<Type> {
    let mut out = Vec::new();
    at_root(t, &mut out);
    match t {
        Type::Var(_) => {}
        Type::Arrow(a, b) => {
            out.extend(neighbours(a).into_iter().map(|a| Type::arrow(a, (**b).clone())));
            out.extend(neighbours(b).into_iter().map(|b| Type::arrow((**a).clone(), b)));
        }
        Type::Conj(a, b) => {
            out.extend(neighbours(a).into_iter().map(|a| Type::conj(a, (**b).clone())));
            out.extend(neighbours(b).into_iter().map(|b| Type::conj((**a).clone(), b)));
        }
        Type::Forall(x, b) => out.extend(neighbours(b).into_iter().map(|b| Type::forall(x.clone(), b))),
    }
    out
}

fn at_root(t: &Type, out: &mut Vec<Type>) {
    if let Type::Conj(a, b) = t {
        out.push(Type::conj((**b).clone(), (**a).clone()));
        if let Type::Conj(a1, a2) = &**a {
            out.push(Type::conj((**a1).clone(), Type::conj((**a2).clone(), (**b).clone())));
        }
        if let Type::Conj(b1, b2) = &**b {
            out.push(Type::conj(Type::conj((**a).clone(), (**b1).clone()), (**b2).clone()));
        }
        if let (Type::Arrow(d1, c1), Type::Arrow(d2, c2)) = (&**a, &**b) {
            if d1 == d2 {
                out.push(Type::arrow((**d1).clone(), Type::conj((**c1).clone(), (**c2).clone())));
            }
        }
    }
    if let Type::Arrow(d, c) = t {
        if let Type::Conj(c1, c2) = &**c {
            out.push(Type::conj(
                Type::arrow((**d).clone(), (**c1).clone()),
                Type::arrow((**d).clone(), (**c2).clone()),
            ));
        }
    }
}

/// The equivalence class of `t`: every type reachable by axiom steps.
pub fn closure(t: &Type) -> BTreeSet<Type> {
    let mut seen = BTreeSet::from([t.clone()]);
    let mut queue = VecDeque::from([t.clone()]);
    while let Some(u) = queue.pop_front() {
        for v in neighbours(&u) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Every `->`/`&` type over `leaves` with exactly `size` constructor nodes.
pub fn all_types(size: usize, leaves: &[&str]) -> Vec<Type> {
    if size == 1 {
        return leaves.iter().map(|l| Type::var(*l)).collect();
    }
    let mut out = Vec::new();
    for left in (1..size - 1).step_by(2) {
        let right = size - 1 - left;
        if right % 2 == 0 {
            continue;
        }
        let ls = all_types(left, leaves);
        let rs = all_types(right, leaves);
        for a in &ls {
            for b in &rs {
                out.push(Type::arrow(a.clone(), b.clone()));
                out.push(Type::conj(a.clone(), b.clone()));
            }
        }
    }
    out
}
