//! Graphviz rendering of reduction graphs.

use std::fmt::Write as _;

use lpl_core::rewrite::GraphEdge;
use lpl_core::{NodeStatus, Rational, ReductionGraph, Rule};

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out
}

pub fn edge_label(e: &GraphEdge) -> String {
    match e.label.rule {
        Rule::Beta => "beta".to_owned(),
        Rule::TypeBeta => "tbeta".to_owned(),
        Rule::Pi => format!("pi {}", Rational::new(e.weight.into(), e.total.into())),
    }
}

/// DOT digraph with one node per term, in discovery order.
pub fn to_dot(graph: &ReductionGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph reductions {\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (i, node) in graph.nodes.iter().enumerate() {
        let style = match node.status {
            NodeStatus::Expanded => "",
            NodeStatus::NormalForm => ", peripheries=2",
            NodeStatus::Stuck => ", style=dashed",
            NodeStatus::BudgetTruncated => ", style=dotted",
        };
        let _ = writeln!(out, "  n{} [label=\"{}\"{}];", i, escape(&node.nf.to_string()), style);
    }
    for e in &graph.edges {
        let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.source, e.target, edge_label(e));
    }
    out.push_str("}\n");
    out
}
