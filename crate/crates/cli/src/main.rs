mod commands;
mod matfile;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "cpbound",
    version,
    about = "Certify matrix norm inequalities and search for extremal constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Which inequality a command targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ineq {
    /// 2|tr(S*T)| <= t tr(S*S) + (1/t) tr(T*T), from file matrices S, T
    Lemma1,
    /// 4|tr(QXY)| <= t tr(X^2+Y^2) + (1/t) tr(XY+YX), from Q, X, Y
    Lemma2,
    /// ||A+B||_F <= sqrt((1+sqrt(2))/2) |||A|+|B|||_F, from A, B
    Theorem,
    /// The full step-by-step chain behind the theorem, from A, B
    Chain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Both matrices free (4n^2 real parameters)
    General,
    /// One-parameter extremal family over the angle alpha
    Canonical,
}

#[derive(Subcommand)]
enum Command {
    /// Check one inequality on matrices loaded from a JSON file
    Check {
        /// Matrix file: {"n": order, "matrices": {name: [[[re, im], ...], ...]}}
        file: PathBuf,
        #[arg(long, value_enum)]
        ineq: Ineq,
        /// Weight parameter; defaults to 1 for lemma1/lemma2 and to
        /// sqrt(2) - 1 (the balanced weight) for the chain
        #[arg(long)]
        t: Option<f64>,
    },
    /// Run seeded random instances through a certifier and report the
    /// smallest slack seen
    Fuzz {
        #[arg(long, value_enum)]
        ineq: Ineq,
        #[arg(long)]
        trials: u64,
        /// Orders are drawn uniformly from 1..=n_max
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Multistart search for the largest norm ratio at a given p
    Search {
        /// Schatten exponent (>= 1, or "inf")
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 32)]
        starts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FamilyArg::General)]
        family: FamilyArg,
        /// Iteration cap per local refinement round
        #[arg(long, default_value_t = 2000)]
        max_iters: usize,
        /// Worker threads; the result is bit-identical for any value
        #[arg(long)]
        workers: Option<usize>,
        /// Write the per-start table as CSV
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the canonical-pair ratio over a uniform angle grid
    Sweep {
        #[arg(long, default_value_t = 100_001)]
        grid_points: usize,
        /// CSV destination: alpha, ratio, closed_form_ratio, abs_difference
        #[arg(long)]
        out: PathBuf,
    },
}

/// Die quietly when the output pipe closes (`cpbound ... | head`), like any
/// Unix filter, instead of panicking on the failed write.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check { file, ineq, t } => commands::check(&file, ineq, t),
        Command::Fuzz {
            ineq,
            trials,
            n_max,
            seed,
        } => commands::fuzz(ineq, trials, n_max, seed),
        Command::Search {
            p,
            n,
            starts,
            seed,
            family,
            max_iters,
            workers,
            out,
        } => commands::search(p, n, starts, seed, family, max_iters, workers, out.as_deref()),
        Command::Sweep { grid_points, out } => commands::sweep(grid_points, &out),
    };
    match outcome {
        Ok(commands::Verdict::Clean) => ExitCode::SUCCESS,
        Ok(commands::Verdict::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
