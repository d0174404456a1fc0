//! `treeflip`: solve, search, reduce, generate and cross-check spanning
//! tree reconfiguration instances.
//!
//! Exit codes: 0 yes (or success), 1 no (or disagreement), 2 error,
//! 3 search budget exhausted.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Format, RunReport};

#[derive(Parser, Debug)]
#[command(name = "treeflip", version, about = "Spanning tree reconfiguration under leaf constraints")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Instance file (JSON).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Where to write the artifact or report; stdout when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub budget_states: usize,
    #[arg(long, global = true, default_value_t = 120_000)]
    pub budget_ms: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Include the flip sequence in the report.
    #[arg(long, global = true)]
    pub witness: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide reachability with a class-specific algorithm.
    Solve {
        #[arg(long, value_enum, default_value_t = Class::Auto)]
        class: Class,
        /// Also run exhaustive search and report whether it agrees.
        #[arg(long)]
        check_oracle: bool,
    },
    /// Exhaustive breadth-first search, or a census of all components.
    Oracle {
        /// List every flip component of admissible trees instead
        #[arg(long)]
        census: bool,
    },
    /// Build a reconfiguration instance from a source graph.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        /// Cover size (vc2st); defaults to the minimum.
        #[arg(long)]
        k: Option<usize>,
        /// Leaf bound (vc2st).
        #[arg(long, default_value_t = 3)]
        leaf_bound: usize,
        /// Source set, comma separated; defaults to the first minimum one.
        #[arg(long, value_delimiter = ',')]
        from: Option<Vec<usize>>,
        /// Target set, comma separated; defaults to the source set.
        #[arg(long, value_delimiter = ',')]
        to: Option<Vec<usize>>,
        /// Dominating set size threshold (ds2st); defaults to one above the larger set.
        #[arg(long)]
        threshold: Option<usize>,
    },
    /// Run seeded solver-versus-search sweeps.
    Crosscheck {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Per-case CSV path.
        #[arg(long, default_value = "crosscheck.csv")]
        csv: PathBuf,
        /// Corrupt the tested side to confirm disagreements are caught.
        #[arg(long, value_enum)]
        mutation: Option<MutationArg>,
    },
    /// Generate a random instance with its class certificate.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    Auto,
    Cograph,
    Interval,
    TwoInternal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceKind {
    Vc2st,
    Ds2stBip,
    Ds2stSplit,
    Vc2stPlanar,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Cograph,
    Interval,
    TwoInternal,
    Reductions,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationArg {
    NegateDecision,
    TruncateWitness,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Interval,
    Cograph,
    PlanarEmbedded,
    Connected,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut report = RunReport::new(argv[1..].to_vec(), cli.common.seed);
    let c = &cli.common;
    let result = match &cli.command {
        Command::Solve { class, check_oracle } => commands::solve(c, *class, *check_oracle, &mut report),
        Command::Oracle { census } => commands::oracle(c, *census, &mut report),
        Command::Reduce {
            kind,
            k,
            leaf_bound,
            from,
            to,
            threshold,
        } => commands::reduce(
            c,
            &commands::ReduceParams {
                kind: *kind,
                k: *k,
                leaf_bound: *leaf_bound,
                from: from.clone(),
                to: to.clone(),
                threshold: *threshold,
            },
            &mut report,
        ),
        Command::Crosscheck {
            suite,
            count,
            csv,
            mutation,
        } => commands::crosscheck(c, *suite, *count, csv, *mutation, &mut report),
        Command::Gen { kind, n } => commands::gen(c, *kind, *n, &mut report),
    };
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            report.error = Some(format!("{e:#}"));
            2
        }
    };
    report.exit_code = code;
    if let Err(e) = report.emit(c) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
