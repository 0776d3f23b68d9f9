//! Structural congruence as a normal form, and one-step reduction.
//!
//! The symmetric rules are oriented and applied to a fixpoint: sums float out
//! of `\x:A.` bodies and application heads, `pi[A -> B](r) s` becomes
//! `pi[B](r s)` when `r` is a function out of the type of `s`, and sums are
//! flattened into multisets sorted by a name-free key. The result is a unique
//! representative of the congruence class, [`StructuralNF`].
//!
//! Reduction (`beta`, type `beta`, and projection) is closed under every
//! context. A projection `pi[A](r1 + ... + rn)` may select any proper
//! sub-multiset of the summands whose combined type is `A`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::term::{structural_key, subst_term, subst_type_in_term, KeyBuilder, Term, TermKey};
use crate::typer::{infer, TypeError};
use crate::types::{canonicalize, factor_arrow, CanonicalType, Prime, Type};

/// Unique representative of a structural congruence class: a sorted,
/// non-empty multiset of summands.
#[derive(Clone, Debug)]
pub struct StructuralNF {
    summands: Vec<Term>,
    keys: Vec<TermKey>,
}

impl PartialEq for StructuralNF {
    fn eq(&self, other: &Self) -> bool {
        self.keys == other.keys
    }
}

impl Eq for StructuralNF {}

impl PartialOrd for StructuralNF {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StructuralNF {
    fn cmp(&self, other: &Self) -> Ordering {
        self.keys.cmp(&other.keys)
    }
}

impl core::hash::Hash for StructuralNF {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.keys.hash(state)
    }
}

impl StructuralNF {
    pub fn summands(&self) -> &[Term] {
        &self.summands
    }

    pub fn keys(&self) -> &[TermKey] {
        &self.keys
    }

    /// The representative as a left-nested sum.
    pub fn to_term(&self) -> Term {
        Term::sum_of(self.summands.iter().cloned())
    }

    /// A projection survives somewhere in the term. For a normal form this
    /// means a well-typed projection with no candidate.
    pub fn has_projection(&self) -> bool {
        self.summands.iter().any(Term::contains_proj)
    }

    fn from_normalized(summands: Vec<Term>) -> Self {
        let mut parts: Vec<(Term, TermKey)> = summands
            .iter()
            .map(|s| KeyBuilder::new(true).arrange(s))
            .collect();
        parts.sort_by(|a, b| a.1.cmp(&b.1));
        let (summands, keys) = parts.into_iter().unzip();
        StructuralNF { summands, keys }
    }
}

impl core::fmt::Display for StructuralNF {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.to_term())
    }
}

/// Normalizes `r` under structural congruence. `r` must be well-typed.
pub fn structural_normalize(r: &Term) -> Result<StructuralNF, TypeError> {
    infer(r)?;
    Ok(StructuralNF::from_normalized(norm(r)?))
}

fn norm(t: &Term) -> Result<Vec<Term>, TypeError> {
    Ok(match t {
        Term::Var(_) => vec![t.clone()],
        Term::Sum(l, r) => {
            let mut out = norm(l)?;
            out.extend(norm(r)?);
            out
        }
        Term::Lam(v, b) => norm(b)?
            .into_iter()
            .map(|s| Term::Lam(v.clone(), alloc::boxed::Box::new(s)))
            .collect(),
        Term::App(f, a) => {
            let arg = Term::sum_of(norm(a)?);
            let mut out = Vec::new();
            for head in norm(f)? {
                out.extend(norm_app(head, &arg)?);
            }
            out
        }
        Term::Proj(ty, b) => vec![Term::proj(ty.clone(), Term::sum_of(norm(b)?))],
        Term::TLam(x, b) => vec![Term::tlam(x.clone(), Term::sum_of(norm(b)?))],
        Term::TApp(f, ty) => vec![Term::tapp(Term::sum_of(norm(f)?), ty.clone())],
    })
}

/// `head arg` where `head` is a normalized summand and `arg` a normalized sum.
fn norm_app(head: Term, arg: &Term) -> Result<Vec<Term>, TypeError> {
    if let Term::Proj(target, inner) = &head {
        let arg_ty = infer(arg)?;
        if factor_arrow(&infer(inner)?, &arg_ty).is_some() {
            let cod = match target {
                Type::Arrow(_, cod) => (**cod).clone(),
                _ => factor_arrow(&canonicalize(target), &arg_ty)
                    .expect("well-typed projection head is an arrow from the argument type")
                    .readback(),
            };
            return norm(&Term::proj(cod, Term::app((**inner).clone(), arg.clone())));
        }
    }
    Ok(vec![Term::app(head, arg.clone())])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Beta,
    TypeBeta,
    Pi,
}

/// Path from the root of [`StructuralNF::to_term`]: 0 for the first child
/// (body, head, left summand), 1 for an argument or right summand.
pub type Position = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepLabel {
    pub rule: Rule,
    pub position: Position,
    /// For projections, indices of the selected summands of the projected sum.
    pub choice: Option<Vec<usize>>,
}

/// A proper sub-multiset of a projected sum with the projection's type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Candidate {
    /// Indices into the summand list, one per selected occurrence.
    pub picks: Vec<usize>,
    /// Number of ways to pick this sub-multiset from the summand occurrences.
    pub multiplicity: u128,
}

/// Distinct proper sub-multisets of `summands` whose combined type is `target`.
///
/// Summands that are structurally equal are interchangeable, so each distinct
/// sub-multiset is reported once, with its multiplicity.
pub fn pi_candidates(target: &CanonicalType, summands: &[Term]) -> Result<Vec<Candidate>, TypeError> {
    // Group equal summands; the first index of each group stands for it.
    let mut groups: Vec<(TermKey, Vec<usize>, CanonicalType)> = Vec::new();
    for (i, s) in summands.iter().enumerate() {
        let key = structural_key(s);
        match groups.iter_mut().find(|g| g.0 == key) {
            Some(g) => g.1.push(i),
            None => groups.push((key, vec![i], infer(s)?)),
        }
    }
    let mut out = Vec::new();
    let mut counts = vec![0usize; groups.len()];
    search(&groups, 0, target.primes().to_vec(), &mut counts, &mut out);
    let total = summands.len();
    out.retain(|c| c.picks.len() < total);
    out.sort();
    Ok(out)
}

fn search(
    groups: &[(TermKey, Vec<usize>, CanonicalType)],
    gi: usize,
    remaining: Vec<Prime>,
    counts: &mut Vec<usize>,
    out: &mut Vec<Candidate>,
) {
    if remaining.is_empty() {
        let mut picks = Vec::new();
        let mut multiplicity = 1u128;
        for (g, &k) in groups.iter().zip(counts.iter()) {
            picks.extend_from_slice(&g.1[..k]);
            multiplicity *= binomial(g.1.len(), k);
        }
        picks.sort_unstable();
        out.push(Candidate { picks, multiplicity });
        return;
    }
    if gi == groups.len() {
        return;
    }
    let (_, members, ty) = &groups[gi];
    search(groups, gi + 1, remaining.clone(), counts, out);
    let mut rest = remaining;
    for k in 1..=members.len() {
        match multiset_minus(&rest, ty.primes()) {
            Some(r) => rest = r,
            None => break,
        }
        counts[gi] = k;
        search(groups, gi + 1, rest.clone(), counts, out);
    }
    counts[gi] = 0;
}

fn multiset_minus(from: &[Prime], sub: &[Prime]) -> Option<Vec<Prime>> {
    let mut out = Vec::with_capacity(from.len());
    let mut j = 0;
    for p in from {
        if j < sub.len() && *p == sub[j] {
            j += 1;
        } else if j < sub.len() && *p > sub[j] {
            return None;
        } else {
            out.push(p.clone());
        }
    }
    (j == sub.len()).then_some(out)
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Redex selection for deterministic exploration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strategy {
    /// First redex in pre-order: the outermost, leftmost one.
    LeftmostOutermost,
    /// First redex in post-order: a leftmost redex containing no other redex.
    LeftmostInnermost,
}

impl Strategy {
    pub const ALL: [Strategy; 2] = [Strategy::LeftmostOutermost, Strategy::LeftmostInnermost];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::LeftmostOutermost => "lo",
            Strategy::LeftmostInnermost => "in",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Strategy::ALL.into_iter().find(|s| s.name() == name)
    }
}

/// How a projection with several candidates splits probability.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weighting {
    /// Every summand occurrence selection is equally likely, so a candidate
    /// weighs its multiplicity.
    #[default]
    Occurrences,
    /// Every distinct candidate sub-multiset is equally likely.
    Distinct,
}

impl Weighting {
    pub fn name(self) -> &'static str {
        match self {
            Weighting::Occurrences => "occurrence",
            Weighting::Distinct => "distinct",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [Weighting::Occurrences, Weighting::Distinct].into_iter().find(|w| w.name() == name)
    }
}

/// A located redex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex {
    pub rule: Rule,
    pub position: Position,
    /// Candidates of a projection redex, never empty.
    pub candidates: Vec<Candidate>,
}

/// Every redex of `t`, in pre-order (a node before its children, left before right).
pub fn redexes(t: &Term) -> Result<Vec<Redex>, TypeError> {
    let mut out = Vec::new();
    collect(t, &mut Vec::new(), &mut out, false)?;
    Ok(out)
}

fn redexes_post_order(t: &Term) -> Result<Vec<Redex>, TypeError> {
    let mut out = Vec::new();
    collect(t, &mut Vec::new(), &mut out, true)?;
    Ok(out)
}

fn collect(t: &Term, path: &mut Position, out: &mut Vec<Redex>, post: bool) -> Result<(), TypeError> {
    let here = match t {
        Term::App(f, _) if matches!(**f, Term::Lam(..)) => {
            Some(Redex { rule: Rule::Beta, position: path.clone(), candidates: Vec::new() })
        }
        Term::TApp(f, _) if matches!(**f, Term::TLam(..)) => {
            Some(Redex { rule: Rule::TypeBeta, position: path.clone(), candidates: Vec::new() })
        }
        Term::Proj(target, body) => {
            let summands: Vec<Term> = body.summands().into_iter().cloned().collect();
            let candidates = pi_candidates(&canonicalize(target), &summands)?;
            (!candidates.is_empty()).then(|| Redex { rule: Rule::Pi, position: path.clone(), candidates })
        }
        _ => None,
    };
    if !post {
        out.extend(here.clone());
    }
    let mut child = |c: &Term, i: u8, out: &mut Vec<Redex>| -> Result<(), TypeError> {
        path.push(i);
        let r = collect(c, path, out, post);
        path.pop();
        r
    };
    match t {
        Term::Var(_) => {}
        Term::Lam(_, b) | Term::Proj(_, b) | Term::TLam(_, b) | Term::TApp(b, _) => child(b, 0, out)?,
        Term::App(f, a) | Term::Sum(f, a) => {
            child(f, 0, out)?;
            child(a, 1, out)?;
        }
    }
    if post {
        out.extend(here);
    }
    Ok(())
}

fn subterm<'a>(t: &'a Term, path: &[u8]) -> &'a Term {
    match (t, path.split_first()) {
        (_, None) => t,
        (Term::Lam(_, b) | Term::Proj(_, b) | Term::TLam(_, b) | Term::TApp(b, _), Some((0, rest))) => subterm(b, rest),
        (Term::App(f, a) | Term::Sum(f, a), Some((i, rest))) => subterm(if *i == 0 { f } else { a }, rest),
        _ => panic!("invalid position"),
    }
}

fn replace_at(t: &Term, path: &[u8], new: Term) -> Term {
    let Some((&i, rest)) = path.split_first() else {
        return new;
    };
    match t {
        Term::Lam(v, b) => Term::Lam(v.clone(), alloc::boxed::Box::new(replace_at(b, rest, new))),
        Term::Proj(ty, b) => Term::proj(ty.clone(), replace_at(b, rest, new)),
        Term::TLam(x, b) => Term::tlam(x.clone(), replace_at(b, rest, new)),
        Term::TApp(f, ty) => Term::tapp(replace_at(f, rest, new), ty.clone()),
        Term::App(f, a) if i == 0 => Term::app(replace_at(f, rest, new), (**a).clone()),
        Term::App(f, a) => Term::app((**f).clone(), replace_at(a, rest, new)),
        Term::Sum(l, r) if i == 0 => Term::sum(replace_at(l, rest, new), (**r).clone()),
        Term::Sum(l, r) => Term::sum((**l).clone(), replace_at(r, rest, new)),
        Term::Var(_) => panic!("invalid position"),
    }
}

/// One outcome of firing a redex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Successor {
    pub label: StepLabel,
    /// Local weight among the outcomes of the same redex.
    pub weight: u128,
    pub target: StructuralNF,
}

/// Fires `redex` in `nf`; structurally equal outcomes are merged.
pub fn fire(nf: &StructuralNF, redex: &Redex, weighting: Weighting) -> Result<Vec<Successor>, TypeError> {
    let term = nf.to_term();
    let site = subterm(&term, &redex.position);
    let mut raw: Vec<(StepLabel, u128, Term)> = Vec::new();
    match (redex.rule, site) {
        (Rule::Beta, Term::App(f, arg)) => {
            let Term::Lam(x, body) = &**f else { unreachable!() };
            let label = StepLabel { rule: Rule::Beta, position: redex.position.clone(), choice: None };
            raw.push((label, 1, subst_term(body, x, arg)));
        }
        (Rule::TypeBeta, Term::TApp(f, ty)) => {
            let Term::TLam(x, body) = &**f else { unreachable!() };
            let label = StepLabel { rule: Rule::TypeBeta, position: redex.position.clone(), choice: None };
            raw.push((label, 1, subst_type_in_term(body, x, ty)));
        }
        (Rule::Pi, Term::Proj(_, body)) => {
            let summands = body.summands();
            for c in &redex.candidates {
                let chosen = Term::sum_of(c.picks.iter().map(|&i| summands[i].clone()));
                let weight = match weighting {
                    Weighting::Occurrences => c.multiplicity,
                    Weighting::Distinct => 1,
                };
                let label = StepLabel { rule: Rule::Pi, position: redex.position.clone(), choice: Some(c.picks.clone()) };
                raw.push((label, weight, chosen));
            }
        }
        _ => panic!("redex does not match its position"),
    }
    let mut out: Vec<Successor> = Vec::with_capacity(raw.len());
    for (label, weight, reduct) in raw {
        let target = structural_normalize(&replace_at(&term, &redex.position, reduct))?;
        match out.iter_mut().find(|s| s.target == target) {
            Some(s) => s.weight += weight,
            None => out.push(Successor { label, weight, target }),
        }
    }
    Ok(out)
}

/// All one-step successors of `nf` under every context, deduplicated.
pub fn enumerate_steps(nf: &StructuralNF) -> Result<Vec<(StepLabel, StructuralNF)>, TypeError> {
    let term = nf.to_term();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for redex in redexes(&term)? {
        for s in fire(nf, &redex, Weighting::Occurrences)? {
            if seen.insert(s.target.clone()) {
                out.push((s.label, s.target));
            }
        }
    }
    Ok(out)
}

/// The redex `strategy` selects in `nf`, if any.
pub fn select_redex(nf: &StructuralNF, strategy: Strategy) -> Result<Option<Redex>, TypeError> {
    let term = nf.to_term();
    let all = match strategy {
        Strategy::LeftmostOutermost => redexes(&term)?,
        Strategy::LeftmostInnermost => redexes_post_order(&term)?,
    };
    Ok(all.into_iter().next())
}

pub fn is_normal(nf: &StructuralNF) -> Result<bool, TypeError> {
    Ok(redexes(&nf.to_term())?.is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completion {
    Complete,
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForms {
    pub forms: BTreeSet<StructuralNF>,
    pub status: Completion,
}

/// Breadth-first closure of [`enumerate_steps`], collecting terms with no
/// successor. `max_steps` bounds the number of non-normal terms expanded.
pub fn normal_forms(r: &Term, max_steps: usize) -> Result<NormalForms, TypeError> {
    let root = structural_normalize(r)?;
    let mut seen = BTreeSet::from([root.clone()]);
    let mut queue = VecDeque::from([root]);
    let mut forms = BTreeSet::new();
    let mut expanded = 0usize;
    let mut status = Completion::Complete;
    while let Some(nf) = queue.pop_front() {
        let steps = enumerate_steps(&nf)?;
        if steps.is_empty() {
            forms.insert(nf);
            continue;
        }
        if expanded == max_steps {
            status = Completion::Truncated;
            continue;
        }
        expanded += 1;
        for (_, next) in steps {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(NormalForms { forms, status })
}

/// Result of following one strategy with first-candidate choices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub result: StructuralNF,
    pub steps: usize,
    /// Some projection along the way had more than one candidate.
    pub branched: bool,
    pub status: Completion,
}

/// Reduces along `strategy`, taking the first candidate at every projection.
pub fn reduce_first(r: &Term, strategy: Strategy, max_steps: usize) -> Result<Trace, TypeError> {
    let mut nf = structural_normalize(r)?;
    let mut steps = 0;
    let mut branched = false;
    loop {
        let Some(redex) = select_redex(&nf, strategy)? else {
            return Ok(Trace { result: nf, steps, branched, status: Completion::Complete });
        };
        if steps == max_steps {
            return Ok(Trace { result: nf, steps, branched, status: Completion::Truncated });
        }
        branched |= redex.candidates.len() > 1;
        let next = fire(&nf, &redex, Weighting::Occurrences)?;
        nf = next.into_iter().next().expect("a redex always has an outcome").target;
        steps += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeStatus {
    /// No redex and no surviving projection.
    NormalForm,
    /// No redex, but a projection has no candidate.
    Stuck,
    Expanded,
    /// Not (fully) expanded because the node budget ran out.
    BudgetTruncated,
}

/// How [`build_graph`] chooses the edges out of a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exploration {
    /// Every redex in every context.
    Full,
    /// Only the redex chosen by the strategy.
    Strategy(Strategy, Weighting),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphNode {
    pub nf: StructuralNF,
    pub status: NodeStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub source: usize,
    pub target: usize,
    pub label: StepLabel,
    pub weight: u128,
    /// Sum of the weights of all outcomes of the same redex.
    pub total: u128,
}

/// Explored reduction graph; node 0 is the root, nodes are in discovery order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

impl ReductionGraph {
    pub fn root(&self) -> &StructuralNF {
        &self.nodes[0].nf
    }
}

/// Breadth-first reduction graph with at most `max_nodes` nodes (at least one).
pub fn build_graph(r: &Term, max_nodes: usize, exploration: Exploration) -> Result<ReductionGraph, TypeError> {
    let root = structural_normalize(r)?;
    let mut index: BTreeMap<StructuralNF, usize> = BTreeMap::from([(root.clone(), 0)]);
    let mut nodes = vec![GraphNode { nf: root, status: NodeStatus::Expanded }];
    let mut edges = Vec::new();
    let mut next = 0;
    while next < nodes.len() {
        let nf = nodes[next].nf.clone();
        let groups: Vec<Vec<Successor>> = match exploration {
            Exploration::Full => {
                let term = nf.to_term();
                let mut groups = Vec::new();
                for redex in redexes(&term)? {
                    groups.push(fire(&nf, &redex, Weighting::Occurrences)?);
                }
                groups
            }
            Exploration::Strategy(strategy, weighting) => match select_redex(&nf, strategy)? {
                Some(redex) => vec![fire(&nf, &redex, weighting)?],
                None => Vec::new(),
            },
        };
        if groups.is_empty() {
            nodes[next].status = if nf.has_projection() { NodeStatus::Stuck } else { NodeStatus::NormalForm };
            next += 1;
            continue;
        }
        let mut truncated = false;
        for group in groups {
            let total = group.iter().map(|s| s.weight).sum();
            for s in group {
                let target = match index.get(&s.target) {
                    Some(&i) => i,
                    None if nodes.len() < max_nodes.max(1) => {
                        let i = nodes.len();
                        index.insert(s.target.clone(), i);
                        nodes.push(GraphNode { nf: s.target, status: NodeStatus::Expanded });
                        i
                    }
                    None => {
                        truncated = true;
                        continue;
                    }
                };
                if !edges.iter().any(|e: &GraphEdge| e.source == next && e.target == target) {
                    edges.push(GraphEdge { source: next, target, label: s.label, weight: s.weight, total });
                }
            }
        }
        if truncated {
            nodes[next].status = NodeStatus::BudgetTruncated;
        }
        next += 1;
    }
    Ok(ReductionGraph { nodes, edges })
}
