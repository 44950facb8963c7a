use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Workbench for sums-of-squares composition formulas.
///
/// Exit status is 0 on success, 1 when a mathematical check fails, and 2 on
/// usage or input errors.
#[derive(Debug, Parser)]
#[command(name = "quadform", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RhoArg {
    #[value(name = "0")]
    Zero,
    Formal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EpsilonArg {
    #[value(name = "0")]
    Zero,
    Rho,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify a formula file by expansion and by the Hurwitz equations.
    Verify { path: PathBuf },
    /// Decide the Hopf condition for [r,s,n].
    Hopf { r: u64, s: u64, n: u64 },
    /// Hopf lower bounds and constructive upper bounds for r <= rmax, s <= smax.
    Bounds { rmax: u64, smax: u64 },
    /// Normal form of a^m in the deleted-quadric ring of dimension n.
    RingPower {
        n: usize,
        m: u64,
        #[arg(long, value_enum, default_value_t = RhoArg::Zero)]
        rho: RhoArg,
        #[arg(long, value_enum, default_value_t = EpsilonArg::Zero)]
        epsilon: EpsilonArg,
    },
    /// Decide [r,s,n] by computing (a1 + a2)^n in the tensor product ring.
    Motivic { r: usize, s: usize, n: u64 },
    /// Chow ring of the quadric Q_m, or Gysin tables for Q_{n-1} in P^n.
    Chow {
        #[arg(required_unless_present = "gysin", conflicts_with = "gysin")]
        m: Option<usize>,
        #[arg(long, value_name = "N")]
        gysin: Option<usize>,
    },
    /// Search for [r,s,n] formulas over GF(p).
    Search {
        r: usize,
        s: usize,
        n: usize,
        p: u64,
        #[command(flatten)]
        opts: SearchArgs,
    },
    /// Search every cell up to (rmax, smax, nmax) over GF(p) and check it against the Hopf condition.
    Sweep {
        rmax: usize,
        smax: usize,
        nmax: usize,
        p: u64,
        /// Time budget per cell, in seconds.
        #[arg(long)]
        budget: Option<f64>,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Enumerate every solution instead of stopping at the first.
    #[arg(long, conflicts_with = "max")]
    exhaustive: bool,
    /// Time budget in seconds.
    #[arg(long)]
    budget: Option<f64>,
    /// Stop after this many solutions.
    #[arg(long)]
    max: Option<usize>,
    /// Do not fix the first matrix to [I; 0].
    #[arg(long)]
    no_canonical: bool,
    /// Only entries 0, 1, -1 with one nonzero per row of each matrix.
    #[arg(long)]
    signed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, cli.format) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
