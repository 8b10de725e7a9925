use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sginertia_cli::{cmd_analyze, cmd_contract, cmd_family, cmd_verify, CommandOutcome, FamilyKind, VerifyArgs};

/// Exact inertia indices of signed graphs.
#[derive(Parser)]
#[command(name = "sginertia", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, exact inertia and bound checks for one `.sg` file.
    Analyze {
        path: PathBuf,
        /// Emit one `key=value` record instead of a table.
        #[arg(long)]
        machine: bool,
    },
    /// Check every bound on all small signed graphs up to `--max-n` vertices.
    Verify {
        #[arg(long, default_value_t = sginertia::verify::DEFAULT_MAX_N)]
        max_n: usize,
        /// Enumerate only connected skeletons (the default).
        #[arg(long, conflicts_with = "all")]
        connected_only: bool,
        /// Enumerate all skeletons, connected or not.
        #[arg(long)]
        all: bool,
        /// Permit `--max-n 8` (about 19.4M signed graphs; roughly an hour per core).
        #[arg(long)]
        include_n8: bool,
        /// Random disjoint unions of two connected graphs to check as well.
        #[arg(long, default_value_t = VerifyArgs::default().sample_unions)]
        sample_unions: usize,
        /// Fraction of vertex deletions checked for inertia monotonicity.
        #[arg(long, default_value_t = VerifyArgs::default().lemma_rate)]
        lemma_rate: f64,
        #[arg(long, default_value_t = VerifyArgs::default().seed)]
        seed: u64,
        /// Also write the machine-readable summary to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        machine: bool,
    },
    /// Emit a cycle or path as `.sg`, with formula and computed inertia.
    Family {
        #[arg(value_enum)]
        kind: Kind,
        n: usize,
        /// Make the cycle negative (one `-` edge).
        #[arg(long)]
        unbalanced: bool,
    },
    /// Contract every cycle of a cycle-disjoint graph and print the tree.
    Contract { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cycle,
    Path,
}

fn run(cli: Cli) -> CommandOutcome {
    match cli.command {
        Command::Analyze { path, machine } => cmd_analyze(&path, machine),
        Command::Verify {
            max_n,
            connected_only: _,
            all,
            include_n8,
            sample_unions,
            lemma_rate,
            seed,
            report,
            machine,
        } => cmd_verify(&VerifyArgs {
            max_n,
            connected_only: !all,
            include_n8,
            sample_unions,
            lemma_rate,
            seed,
            report,
            machine,
        }),
        Command::Family { kind, n, unbalanced } => {
            let kind = match kind {
                Kind::Cycle => FamilyKind::Cycle,
                Kind::Path => FamilyKind::Path,
            };
            cmd_family(kind, n, unbalanced)
        }
        Command::Contract { path } => cmd_contract(&path),
    }
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.exit_code as u8)
}
