//! Exact distributions over normal forms.
//!
//! A strategy fixes which redex fires; only projections branch. Each outcome
//! of a projection carries its candidate weight over the total weight of the
//! redex, and the probability of a normal form is the sum over paths of the
//! product of the edge probabilities.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rewrite::{fire, select_redex, structural_normalize, StructuralNF};
pub use crate::rewrite::{Strategy, Weighting};
use crate::term::Term;
use crate::typer::TypeError;

pub type Rational = num_rational::BigRational;

fn ratio(num: u128, den: u128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Distribution {
    /// Normal forms without a surviving projection.
    pub outcomes: BTreeMap<StructuralNF, Rational>,
    /// Normal forms that still contain a projection; counted in the residual.
    pub stuck: BTreeMap<StructuralNF, Rational>,
    /// Mass of paths cut by the step budget or by a cycle.
    pub truncated: Rational,
}

impl Distribution {
    fn point(nf: StructuralNF) -> Self {
        let mut d = Distribution { truncated: Rational::zero(), ..Default::default() };
        if nf.has_projection() {
            d.stuck.insert(nf, Rational::one());
        } else {
            d.outcomes.insert(nf, Rational::one());
        }
        d
    }

    fn cut() -> Self {
        Distribution { truncated: Rational::one(), ..Default::default() }
    }

    fn add_scaled(&mut self, other: &Distribution, p: &Rational) {
        for (nf, q) in &other.outcomes {
            *self.outcomes.entry(nf.clone()).or_insert_with(Rational::zero) += q * p;
        }
        for (nf, q) in &other.stuck {
            *self.stuck.entry(nf.clone()).or_insert_with(Rational::zero) += q * p;
        }
        self.truncated += &other.truncated * p;
    }

    pub fn probability(&self, nf: &StructuralNF) -> Rational {
        self.outcomes.get(nf).cloned().unwrap_or_else(Rational::zero)
    }

    /// Mass not assigned to a proper normal form: stuck plus truncated.
    pub fn residual(&self) -> Rational {
        self.stuck.values().fold(self.truncated.clone(), |acc, p| acc + p)
    }

    pub fn total(&self) -> Rational {
        self.outcomes.values().fold(self.residual(), |acc, p| acc + p)
    }

    /// Canonical text: one `p/q<TAB>term` line per outcome in term order, a
    /// `# stuck` comment line per stuck form, then `residual<TAB>p/q`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (nf, p) in &self.outcomes {
            let _ = writeln!(out, "{}\t{}", p, nf);
        }
        for (nf, p) in &self.stuck {
            let _ = writeln!(out, "# stuck\t{}\t{}", p, nf);
        }
        let _ = writeln!(out, "residual\t{}", self.residual());
        out
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

struct Evaluator {
    strategy: Strategy,
    weighting: Weighting,
    budget: usize,
    memo: BTreeMap<StructuralNF, Distribution>,
    active: BTreeSet<StructuralNF>,
}

impl Evaluator {
    fn eval(&mut self, nf: &StructuralNF) -> Result<Distribution, TypeError> {
        if let Some(d) = self.memo.get(nf) {
            return Ok(d.clone());
        }
        if self.active.contains(nf) {
            return Ok(Distribution::cut());
        }
        let Some(redex) = select_redex(nf, self.strategy)? else {
            let d = Distribution::point(nf.clone());
            self.memo.insert(nf.clone(), d.clone());
            return Ok(d);
        };
        if self.budget == 0 {
            return Ok(Distribution::cut());
        }
        self.budget -= 1;
        let successors = fire(nf, &redex, self.weighting)?;
        let total: u128 = successors.iter().map(|s| s.weight).sum();
        self.active.insert(nf.clone());
        let mut d = Distribution { truncated: Rational::zero(), ..Default::default() };
        for s in &successors {
            let sub = self.eval(&s.target)?;
            d.add_scaled(&sub, &ratio(s.weight, total));
        }
        self.active.remove(nf);
        self.memo.insert(nf.clone(), d.clone());
        Ok(d)
    }
}

/// Distribution of the normal forms reached from `r` along `strategy`.
/// `max_steps` bounds the number of distinct terms expanded.
pub fn distribution(
    r: &Term,
    strategy: Strategy,
    weighting: Weighting,
    max_steps: usize,
) -> Result<Distribution, TypeError> {
    let root = structural_normalize(r)?;
    let mut ev = Evaluator {
        strategy,
        weighting,
        budget: max_steps,
        memo: BTreeMap::new(),
        active: BTreeSet::new(),
    };
    ev.eval(&root)
}

/// A term, or the residual when `term` is `None`, on which two strategies differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub left: Strategy,
    pub right: Strategy,
    pub term: Option<StructuralNF>,
    pub left_probability: Rational,
    pub right_probability: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyReport {
    pub distributions: Vec<(Strategy, Distribution)>,
    pub disagreements: Vec<Disagreement>,
}

impl StrategyReport {
    pub fn agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Computes the distribution under each strategy and lists every pairwise
/// difference.
pub fn compare_strategies(
    r: &Term,
    strategies: &[Strategy],
    weighting: Weighting,
    max_steps: usize,
) -> Result<StrategyReport, TypeError> {
    let mut distributions = Vec::with_capacity(strategies.len());
    for &s in strategies {
        distributions.push((s, distribution(r, s, weighting, max_steps)?));
    }
    let mut disagreements = Vec::new();
    for (i, (left, ld)) in distributions.iter().enumerate() {
        for (right, rd) in &distributions[i + 1..] {
            let terms: BTreeSet<&StructuralNF> = ld.outcomes.keys().chain(rd.outcomes.keys()).collect();
            for nf in terms {
                let (lp, rp) = (ld.probability(nf), rd.probability(nf));
                if lp != rp {
                    disagreements.push(Disagreement {
                        left: *left,
                        right: *right,
                        term: Some(nf.clone()),
                        left_probability: lp,
                        right_probability: rp,
                    });
                }
            }
            if ld.residual() != rd.residual() {
                disagreements.push(Disagreement {
                    left: *left,
                    right: *right,
                    term: None,
                    left_probability: ld.residual(),
                    right_probability: rd.residual(),
                });
            }
        }
    }
    Ok(StrategyReport { distributions, disagreements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;

    const THREE_WAY: &str = "pi[A](x:A + pi[A](y:A + z:A) + z:A)";

    fn nf(src: &str) -> StructuralNF {
        structural_normalize(&parse_term(src).unwrap()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn dist(src: &str, s: Strategy, w: Weighting) -> Distribution {
        distribution(&parse_term(src).unwrap(), s, w, 10_000).unwrap()
    }

    #[test]
    fn three_way_leftmost_outermost() {
        let d = dist(THREE_WAY, Strategy::LeftmostOutermost, Weighting::Occurrences);
        assert_eq!(d.probability(&nf("x:A")), q(1, 3));
        assert_eq!(d.probability(&nf("y:A")), q(1, 6));
        assert_eq!(d.probability(&nf("z:A")), q(1, 2));
        assert_eq!(d.outcomes.len(), 3);
        assert!(d.residual().is_zero());
        assert_eq!(d.to_text(), "1/3\tx:A\n1/6\ty:A\n1/2\tz:A\nresidual\t0\n");
    }

    #[test]
    fn strategies_agree_on_the_three_way_choice_under_occurrence_weighting() {
        let r = parse_term(THREE_WAY).unwrap();
        let report = compare_strategies(&r, &Strategy::ALL, Weighting::Occurrences, 10_000).unwrap();
        assert!(report.agree(), "{:?}", report.disagreements);
    }

    #[test]
    fn distinct_weighting_depends_on_the_strategy() {
        // Innermost first leaves pi[A](x + z + z) half of the time, where the
        // two distinct candidates split evenly: x gets 1/2 * 1/3 + 1/2 * 1/2.
        let d = dist(THREE_WAY, Strategy::LeftmostInnermost, Weighting::Distinct);
        assert_eq!(d.probability(&nf("x:A")), q(5, 12));
        assert_eq!(d.probability(&nf("y:A")), q(1, 6));
        assert_eq!(d.probability(&nf("z:A")), q(5, 12));
        let r = parse_term(THREE_WAY).unwrap();
        let report = compare_strategies(&r, &Strategy::ALL, Weighting::Distinct, 10_000).unwrap();
        assert_eq!(report.disagreements.len(), 2);
    }

    #[test]
    fn point_masses() {
        let d = dist("x:A", Strategy::LeftmostOutermost, Weighting::Occurrences);
        assert_eq!(d.to_text(), "1\tx:A\nresidual\t0\n");
        for w in [Weighting::Occurrences, Weighting::Distinct] {
            let d = dist("pi[A](x:A + x:A)", Strategy::LeftmostOutermost, w);
            assert_eq!(d.outcomes.len(), 1);
            assert_eq!(d.probability(&nf("x:A")), q(1, 1));
        }
    }

    #[test]
    fn stuck_forms_go_to_the_residual() {
        let d = dist("pi[A](r:A&B)", Strategy::LeftmostOutermost, Weighting::Occurrences);
        assert!(d.outcomes.is_empty());
        assert_eq!(d.residual(), q(1, 1));
        assert!(d.truncated.is_zero());
    }

    #[test]
    fn budget_goes_to_the_residual() {
        let r = parse_term(THREE_WAY).unwrap();
        let d = distribution(&r, Strategy::LeftmostOutermost, Weighting::Occurrences, 1).unwrap();
        assert_eq!(d.probability(&nf("x:A")), q(1, 3));
        assert_eq!(d.truncated, q(1, 3));
        assert_eq!(d.total(), q(1, 1));
    }
}
