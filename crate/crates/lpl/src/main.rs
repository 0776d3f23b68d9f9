use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lpl::{DistOptions, GraphOptions, ReduceOptions};
use lpl_core::{Exploration, Strategy, Weighting};

/// Typed lambda calculus with non-deterministic projection.
#[derive(Parser)]
#[command(name = "lpl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    /// Leftmost-outermost redex.
    Lo,
    /// Leftmost-innermost redex.
    In,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Lo => Strategy::LeftmostOutermost,
            StrategyArg::In => Strategy::LeftmostInnermost,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightingArg {
    /// Each way of picking summand occurrences is equally likely.
    Occurrence,
    /// Each distinct sub-multiset of summands is equally likely.
    Distinct,
}

impl From<WeightingArg> for Weighting {
    fn from(w: WeightingArg) -> Self {
        match w {
            WeightingArg::Occurrence => Weighting::Occurrences,
            WeightingArg::Distinct => Weighting::Distinct,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical type of a term.
    Check {
        /// A `.lpl` file or program text.
        input: String,
    },
    /// Decide whether two types are equivalent.
    Equiv { left: String, right: String },
    /// Reduce a term to normal form.
    Reduce {
        input: String,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        /// Print every reachable normal form.
        #[arg(long)]
        all: bool,
    },
    /// Print the exact distribution over normal forms.
    Dist {
        input: String,
        #[arg(long, value_enum, default_value = "lo")]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value = "occurrence")]
        weighting: WeightingArg,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        /// Compare with the distributions of the other strategies.
        #[arg(long)]
        compare: bool,
    },
    /// Print the reduction graph in DOT.
    Graph {
        input: String,
        #[arg(long, default_value_t = 1_000)]
        max_nodes: usize,
        /// Follow every redex instead of the strategy's.
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value = "lo")]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value = "occurrence")]
        weighting: WeightingArg,
    },
}

fn main() -> ExitCode {
    let out = match Cli::parse().command {
        Command::Check { input } => lpl::check(&input),
        Command::Equiv { left, right } => lpl::equiv(&left, &right),
        Command::Reduce { input, max_steps, all } => lpl::reduce(&input, ReduceOptions { max_steps, all }),
        Command::Dist { input, strategy, weighting, max_steps, compare } => lpl::dist(
            &input,
            DistOptions { strategy: strategy.into(), weighting: weighting.into(), max_steps, compare },
        ),
        Command::Graph { input, max_nodes, full, strategy, weighting } => {
            let exploration = if full {
                Exploration::Full
            } else {
                Exploration::Strategy(strategy.into(), weighting.into())
            };
            lpl::graph(&input, GraphOptions { max_nodes, exploration })
        }
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code)
}
