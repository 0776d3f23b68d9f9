//! Seeded generators of types and of well-typed terms.
//!
//! Terms are built along typing derivations, so every output type checks.
//! The same seed, budget and pool always give the same tree.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::names::fresh_name;
use crate::term::{Term, TypedVar};
use crate::typer::infer;
use crate::types::Type;

const VAR_NAMES: [&str; 5] = ["x", "y", "z", "u", "v"];

fn split(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let a = rng.gen_range(1..n);
    (a, n - a)
}

/// A type of size at most `size_budget` over the variables in `var_pool`,
/// which must be non-empty.
pub fn gen_type(seed: u64, size_budget: usize, var_pool: &[&str]) -> Type {
    assert!(!var_pool.is_empty(), "empty variable pool");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    type_at(&mut rng, size_budget.max(1), var_pool)
}

fn type_at(rng: &mut ChaCha8Rng, budget: usize, pool: &[&str]) -> Type {
    let pick = |rng: &mut ChaCha8Rng| pool[rng.gen_range(0..pool.len())].to_string();
    if budget == 1 || rng.gen_ratio(1, 4) {
        return Type::Var(pick(rng));
    }
    match rng.gen_range(0..5) {
        0 | 1 if budget >= 3 => {
            let (a, b) = split(rng, budget - 1);
            Type::arrow(type_at(rng, a, pool), type_at(rng, b, pool))
        }
        2 | 3 if budget >= 3 => {
            let (a, b) = split(rng, budget - 1);
            Type::conj(type_at(rng, a, pool), type_at(rng, b, pool))
        }
        _ => {
            let binder = pick(rng);
            Type::forall(binder, type_at(rng, budget - 1, pool))
        }
    }
}

/// A well-typed term of size at most `size_budget` whose free variables are
/// annotated with types from `type_pool`, which must be non-empty.
pub fn gen_term(seed: u64, size_budget: usize, type_pool: &[Type]) -> Term {
    assert!(!type_pool.is_empty(), "empty type pool");
    let mut taken = BTreeSet::new();
    for t in type_pool {
        t.all_names(&mut taken);
    }
    let mut g = TermGen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        pool: type_pool.to_vec(),
        env: Vec::new(),
        type_vars: Vec::new(),
        taken,
    };
    let t = g.term(size_budget.max(1));
    debug_assert!(infer(&t).is_ok(), "generated an ill-typed term: {}", t);
    t
}

struct TermGen {
    rng: ChaCha8Rng,
    /// Annotations allowed on free variables.
    pool: Vec<Type>,
    /// Enclosing term binders, innermost last.
    env: Vec<TypedVar>,
    /// Enclosing type binders.
    type_vars: Vec<String>,
    /// Type variable names that a new type binder must avoid.
    taken: BTreeSet<String>,
}

impl TermGen {
    fn name(&mut self) -> String {
        VAR_NAMES[self.rng.gen_range(0..VAR_NAMES.len())].to_string()
    }

    fn pool_type(&mut self) -> Type {
        self.pool[self.rng.gen_range(0..self.pool.len())].clone()
    }

    /// A type for a term binder: the pool or an enclosing type variable.
    fn binder_type(&mut self) -> Type {
        if !self.type_vars.is_empty() && self.rng.gen_ratio(1, 2) {
            Type::Var(self.type_vars[self.rng.gen_range(0..self.type_vars.len())].clone())
        } else {
            self.pool_type()
        }
    }

    /// Free of every enclosing type binder, hence safe on a free variable.
    fn closed_under_binders(&self, t: &Type) -> bool {
        t.free_vars().iter().all(|x| !self.type_vars.contains(x))
    }

    fn var(&mut self) -> Term {
        if !self.env.is_empty() && self.rng.gen_ratio(2, 3) {
            let v = self.env[self.rng.gen_range(0..self.env.len())].clone();
            return Term::Var(v);
        }
        let name = self.name();
        let ty = self.pool_type();
        Term::var(name, ty)
    }

    fn under(&mut self, v: TypedVar, budget: usize) -> Term {
        self.env.push(v.clone());
        let body = self.term(budget);
        self.env.pop();
        Term::Lam(v, Box::new(body))
    }

    fn lam(&mut self, budget: usize) -> Term {
        let v = TypedVar::new(self.name(), self.binder_type());
        self.under(v, budget - 1)
    }

    fn sum(&mut self, budget: usize) -> Term {
        let (a, b) = split(&mut self.rng, budget - 1);
        Term::sum(self.term(a), self.term(b))
    }

    /// `pi[T](s + t)` with `T` the type of one side.
    fn proj(&mut self, budget: usize) -> Term {
        let (a, b) = split(&mut self.rng, budget - 2);
        let l = self.term(a);
        let r = self.term(b);
        let pick_left = self.rng.gen_ratio(1, 2);
        let chosen = if pick_left { &l } else { &r };
        let target = infer(chosen).expect("generated subterm is well-typed").readback();
        Term::proj(target, Term::sum(l, r))
    }

    fn app(&mut self, budget: usize) -> Term {
        let (head_budget, arg_budget) = split(&mut self.rng, budget - 1);
        let arg = self.term(arg_budget);
        let dom = infer(&arg).expect("generated subterm is well-typed").readback();
        let head = match self.rng.gen_range(0..3) {
            0 if self.closed_under_binders(&dom) => {
                let cod = self.pool_type();
                let name = self.name();
                Term::var(name, Type::arrow(dom, cod))
            }
            1 if head_budget >= 5 => {
                // pi[D -> T](\x:D. s + t) applied to an argument of type D.
                let v = TypedVar::new(self.name(), dom.clone());
                self.env.push(v.clone());
                let (a, b) = split(&mut self.rng, head_budget - 3);
                let l = self.term(a);
                let r = self.term(b);
                self.env.pop();
                let cod = infer(&l).expect("generated subterm is well-typed").readback();
                Term::proj(Type::arrow(dom, cod), Term::Lam(v, Box::new(Term::sum(l, r))))
            }
            _ if head_budget >= 2 => {
                let v = TypedVar::new(self.name(), dom);
                self.under(v, head_budget - 1)
            }
            _ => return self.var(),
        };
        Term::app(head, arg)
    }

    fn tlam(&mut self, budget: usize) -> Term {
        let x = fresh_name("X", |n| self.taken.contains(n) || self.type_vars.iter().any(|t| t == n));
        self.type_vars.push(x.clone());
        self.taken.insert(x.clone());
        let body = if budget >= 3 && self.rng.gen_ratio(3, 4) {
            let v = TypedVar::new(self.name(), Type::Var(x.clone()));
            self.under(v, budget - 2)
        } else {
            self.term(budget - 1)
        };
        self.type_vars.pop();
        let t = Term::tlam(x, body);
        if infer(&t).is_ok() {
            t
        } else {
            self.var()
        }
    }

    fn tapp(&mut self, budget: usize) -> Term {
        let f = self.tlam(budget - 1);
        if !matches!(f, Term::TLam(..)) {
            return f;
        }
        let arg = self.binder_type();
        Term::tapp(f, arg)
    }

    fn term(&mut self, budget: usize) -> Term {
        if budget <= 1 {
            return self.var();
        }
        match self.rng.gen_range(0..14) {
            0 | 1 => self.var(),
            2 | 3 => self.lam(budget),
            4 | 5 | 6 if budget >= 3 => self.app(budget),
            7 | 8 if budget >= 3 => self.sum(budget),
            9 | 10 if budget >= 4 => self.proj(budget),
            11 | 12 if budget >= 2 => self.tlam(budget),
            13 if budget >= 3 => self.tapp(budget),
            _ => self.lam(budget),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pool() -> Vec<Type> {
        alloc::vec![Type::var("A"), Type::var("B"), Type::arrow(Type::var("A"), Type::var("B"))]
    }

    #[test]
    fn unit_budget_gives_a_leaf() {
        for seed in 0..50 {
            assert_eq!(gen_type(seed, 1, &["A"]), Type::var("A"));
            assert!(matches!(gen_term(seed, 1, &[Type::var("A")]), Term::Var(_)));
        }
    }

    #[test]
    fn deterministic() {
        for seed in 0..20 {
            assert_eq!(gen_type(seed, 9, &["A", "B"]), gen_type(seed, 9, &["A", "B"]));
            assert_eq!(gen_term(seed, 12, &pool()), gen_term(seed, 12, &pool()));
        }
    }

    #[test]
    fn types_respect_the_budget() {
        for seed in 0..10_000 {
            let t = gen_type(seed, 8, &["A", "B", "C"]);
            assert!(t.size() <= 8);
        }
    }

    #[test]
    fn terms_type_check_and_respect_the_budget() {
        for seed in 0..10_000 {
            let t = gen_term(seed, 10, &pool());
            assert!(t.size() <= 10, "{}", t);
            assert!(infer(&t).is_ok(), "{}", t);
        }
    }

    #[test]
    fn every_constructor_is_frequent() {
        fn count(t: &Term, tally: &mut [usize; 7]) {
            let i = match t {
                Term::Var(_) => 0,
                Term::Lam(..) => 1,
                Term::App(..) => 2,
                Term::Sum(..) => 3,
                Term::Proj(..) => 4,
                Term::TLam(..) => 5,
                Term::TApp(..) => 6,
            };
            tally[i] += 1;
            match t {
                Term::Var(_) => {}
                Term::Lam(_, b) | Term::Proj(_, b) | Term::TLam(_, b) | Term::TApp(b, _) => count(b, tally),
                Term::App(f, a) | Term::Sum(f, a) => {
                    count(f, tally);
                    count(a, tally);
                }
            }
        }
        let mut tally = [0usize; 7];
        for seed in 0..2_000 {
            count(&gen_term(seed, 8, &pool()), &mut tally);
        }
        let total: usize = tally.iter().sum();
        for (i, n) in tally.iter().enumerate() {
            assert!(n * 100 >= total, "constructor {} at {}/{}", i, n, total);
        }
    }
}
