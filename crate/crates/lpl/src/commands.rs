use std::fmt::Write as _;

use lpl_core::rewrite::{normal_forms, reduce_first, Completion};
use lpl_core::{
    build_graph, compare_strategies, distribution, infer, print_type, type_equiv, Exploration, NodeStatus,
    Strategy, StructuralNF, Weighting,
};
use num_traits::Zero;

use crate::dot::to_dot;
use crate::source::{load_term, load_type};
use crate::{exit, Error, Output};

fn run(f: impl FnOnce() -> Result<Output, Error>) -> Output {
    f().unwrap_or_else(Output::from)
}

fn truncation_notice(out: &mut Output, what: &str) {
    out.code = exit::TRUNCATED;
    let _ = writeln!(out.stderr, "Truncated: {}", what);
}

fn nf_line(nf: &StructuralNF) -> String {
    if nf.has_projection() {
        format!("{}  # stuck\n", nf)
    } else {
        format!("{}\n", nf)
    }
}

/// `: T` with `T` the read-back of the canonical type.
pub fn check(input: &str) -> Output {
    run(|| {
        let t = infer(&load_term(input)?)?;
        Ok(Output::ok(format!(": {}\n", print_type(&t.readback()))))
    })
}

pub fn equiv(left: &str, right: &str) -> Output {
    run(|| {
        let (a, b) = (load_type(left)?, load_type(right)?);
        Ok(if type_equiv(&a, &b) {
            Output::ok("yes\n".to_owned())
        } else {
            Output { stdout: "no\n".to_owned(), code: exit::NOT_EQUIVALENT, ..Default::default() }
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReduceOptions {
    pub max_steps: usize,
    pub all: bool,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions { max_steps: 10_000, all: false }
    }
}

/// Every normal form, or the one reached leftmost-outermost taking the first
/// candidate of each projection.
pub fn reduce(input: &str, opts: ReduceOptions) -> Output {
    run(|| {
        let term = load_term(input)?;
        let mut out = Output::default();
        if opts.all {
            let nfs = normal_forms(&term, opts.max_steps)?;
            for nf in &nfs.forms {
                out.stdout.push_str(&nf_line(nf));
            }
            if nfs.status == Completion::Truncated {
                truncation_notice(&mut out, &format!("expanded {} terms without closing the search", opts.max_steps));
            }
        } else {
            let trace = reduce_first(&term, Strategy::LeftmostOutermost, opts.max_steps)?;
            if trace.status == Completion::Truncated {
                truncation_notice(&mut out, &format!("no normal form within {} steps", opts.max_steps));
                let _ = writeln!(out.stderr, "last term: {}", trace.result);
                return Ok(out);
            }
            out.stdout.push_str(&nf_line(&trace.result));
            if trace.branched {
                out.stderr.push_str("note: a projection had several candidates; the first was taken (see --all)\n");
            }
        }
        Ok(out)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistOptions {
    pub strategy: Strategy,
    pub weighting: Weighting,
    pub max_steps: usize,
    /// Also compare against every other strategy.
    pub compare: bool,
}

impl Default for DistOptions {
    fn default() -> Self {
        DistOptions {
            strategy: Strategy::LeftmostOutermost,
            weighting: Weighting::Occurrences,
            max_steps: 10_000,
            compare: false,
        }
    }
}

/// The canonical distribution text, optionally followed by a strategy
/// comparison as `#` comment lines.
pub fn dist(input: &str, opts: DistOptions) -> Output {
    run(|| {
        let term = load_term(input)?;
        let d = distribution(&term, opts.strategy, opts.weighting, opts.max_steps)?;
        let mut out = Output::ok(d.to_text());
        if opts.compare {
            let mut order = vec![opts.strategy];
            order.extend(Strategy::ALL.into_iter().filter(|s| *s != opts.strategy));
            let report = compare_strategies(&term, &order, opts.weighting, opts.max_steps)?;
            if report.agree() {
                let names: Vec<&str> = order.iter().map(|s| s.name()).collect();
                let _ = writeln!(out.stdout, "# strategies {} agree", names.join(", "));
            }
            for d in &report.disagreements {
                let what = d.term.as_ref().map_or_else(|| "residual".to_owned(), |t| t.to_string());
                let _ = writeln!(
                    out.stdout,
                    "# {} {} vs {} {}\t{}",
                    d.left.name(),
                    d.left_probability,
                    d.right.name(),
                    d.right_probability,
                    what
                );
            }
        }
        if !d.truncated.is_zero() {
            truncation_notice(&mut out, &format!("mass {} cut by the step budget", d.truncated));
        }
        Ok(out)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphOptions {
    pub max_nodes: usize,
    pub exploration: Exploration,
}

impl Default for GraphOptions {
    fn default() -> Self {
        GraphOptions {
            max_nodes: 1_000,
            exploration: Exploration::Strategy(Strategy::LeftmostOutermost, Weighting::Occurrences),
        }
    }
}

pub fn graph(input: &str, opts: GraphOptions) -> Output {
    run(|| {
        let g = build_graph(&load_term(input)?, opts.max_nodes, opts.exploration)?;
        let mut out = Output::ok(to_dot(&g));
        if g.nodes.iter().any(|n| n.status == NodeStatus::BudgetTruncated) {
            truncation_notice(&mut out, &format!("graph cut at {} nodes", opts.max_nodes));
        }
        Ok(out)
    })
}
