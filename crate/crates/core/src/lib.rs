//! Explicitly typed lambda calculus with sums and type-directed,
//! non-deterministic projection.
//!
//! Types are identified modulo commutativity and associativity of `&` and
//! distributivity of `->` over `&`. The crate provides the equivalence
//! decision procedure, a type checker, a reduction engine that enumerates
//! every non-deterministic outcome, and an exact probabilistic evaluator.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod names;

pub mod gen;
pub mod prob;
pub mod rewrite;
pub mod syntax;
pub mod term;
pub mod typer;
pub mod types;

pub use gen::{gen_term, gen_type};
pub use prob::{compare_strategies, distribution, Distribution, Rational, StrategyReport};
pub use rewrite::{
    build_graph, enumerate_steps, normal_forms, pi_candidates, reduce_first, structural_normalize, Completion,
    Exploration, NodeStatus, ReductionGraph, Rule, StepLabel, Strategy, StructuralNF, Weighting,
};
pub use syntax::{parse_program, parse_term, parse_type, print_term, print_type, ParseError, ParseErrorKind, Program};
pub use term::{alpha_eq, free_vars, subst_term, subst_type_in_term, type_env, Term, TypedVar, VarKey};
pub use typer::{infer, TypeError, TypeErrorKind};
pub use types::{
    canonicalize, compare_canonical, conj_remainder, factor_arrow, free_type_vars, subst_type, type_equiv,
    CanonicalType, Prime, Type,
};
