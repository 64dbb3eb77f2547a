mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Exact 2-rainbow and Roman domination on small graphs.
///
/// GRAPH arguments are edge-list files, `-` for standard input, or
/// `named:NAME:P1,P2` (for example `named:cycle:5`).
#[derive(Debug, Parser)]
#[command(name = "rainbow-roman", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    R2,
    Roman,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    RomanToR2,
    R2ToRoman,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructOp {
    AddC4,
    StarLink,
    GapK,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute γ_r2 and/or γ_R exactly.
    Solve {
        graph: String,
        #[arg(long, value_enum, default_value = "both")]
        param: Param,
        /// Include an optimal function for each computed parameter.
        #[arg(long)]
        witness: bool,
        /// List every minimum 2-rainbow dominating function.
        #[arg(long)]
        all_min: bool,
    },
    /// Convert a dominating function between the two kinds.
    Convert {
        graph: String,
        assignment: String,
        #[arg(long, value_enum)]
        direction: Direction,
    },
    /// Build the 3-SAT gadget for a DIMACS CNF file.
    Reduce {
        cnf: PathBuf,
        /// Write the gadget as an edge list to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Solve the gadget and check it against brute-force SAT.
        #[arg(long)]
        check: bool,
    },
    /// Look for forbidden induced subgraphs.
    Recognize {
        graph: String,
        /// `theorem2` ({P5, C5, C4}), `theorem3` ({3K1, K2+K1}), or edge-list files of forbidden graphs.
        #[arg(long, num_args = 1.., required = true)]
        family: Vec<String>,
        /// Also check γ_r2 = γ_R on every induced subgraph.
        #[arg(long)]
        hereditary_direct: bool,
        /// Also check membership in G_k directly.
        #[arg(long)]
        gk: Option<usize>,
    },
    /// Extremality check and audit of every minimum 2-rainbow function.
    Structure { graph: String },
    /// Build a graph with a prescribed change of both parameters.
    Construct {
        #[arg(long, value_enum)]
        op: ConstructOp,
        #[arg(long)]
        k: Option<usize>,
        graph: Option<String>,
        /// Write the constructed edge list to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan all graphs up to an order plus optional random samples.
    Scan {
        #[arg(long)]
        max_order: usize,
        /// ORDER,COUNT,SEED; may be repeated.
        #[arg(long, value_parser = input::parse_sample)]
        sample: Vec<rainbow_roman::catalog::Sample>,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
}

/// What a successful command prints, and whether it exposed a broken
/// identity.
pub struct Outcome {
    pub text: String,
    pub violated: bool,
}

impl Outcome {
    fn json(value: &impl serde::Serialize, violated: bool) -> anyhow::Result<Outcome> {
        Ok(Outcome { text: serde_json::to_string(value)? + "\n", violated })
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Solve { graph, param, witness, all_min } => commands::solve(&graph, param, witness, all_min),
        Command::Convert { graph, assignment, direction } => commands::convert(&graph, &assignment, direction),
        Command::Reduce { cnf, out, check } => commands::reduce(&cnf, out.as_deref(), check),
        Command::Recognize { graph, family, hereditary_direct, gk } => {
            commands::recognize(&graph, &family, hereditary_direct, gk)
        }
        Command::Structure { graph } => commands::structure(&graph),
        Command::Construct { op, k, graph, out } => commands::construct(op, k, graph.as_deref(), out.as_deref()),
        Command::Scan { max_order, sample, format } => commands::scan(max_order, &sample, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let mut stdout = std::io::stdout().lock();
    match run(cli) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.text.as_bytes());
            if outcome.violated {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            let _ = writeln!(stdout, "{}", serde_json::json!({ "error": format!("{err:#}") }));
            ExitCode::from(1)
        }
    }
}
