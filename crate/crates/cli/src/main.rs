//! `submod`: command-line access to the submodular toolkit.

mod commands;
mod report;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "submod", version, about = "Submodular set-function toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Function spec (JSON document).
    pub spec: PathBuf,
    /// Largest ground set for exhaustive enumeration.
    #[arg(long, default_value_t = submodular::setfn::DEFAULT_EXHAUSTIVE_CAP)]
    pub max_exhaustive: usize,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Check submodularity (and monotonicity where required) before running.
    #[arg(long)]
    pub verify: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SfmAlgo {
    Minnorm,
    Brute,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProxAlgo {
    Minnorm,
    Decomposition,
    Homotopy,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Submodularity, monotonicity, symmetry and posimodularity with witnesses.
    Check(Common),
    /// Minimum value with the smallest and largest minimizers.
    Minimize {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SfmAlgo::Minnorm)]
        algo: SfmAlgo,
        #[arg(long, default_value_t = 1e-9)]
        eps: f64,
    },
    /// F(A) for --set, Lovász extension f(w) for --w.
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        w: Option<Vec<f64>>,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Greedy base of B(F), or of P₊(F) with --truncated.
    Greedy {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        w: Vec<f64>,
        #[arg(long)]
        truncated: bool,
    },
    /// max_A s(A) − F(A).
    Conjugate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        s: Vec<f64>,
    },
    /// Quadratic prox: min f(w) + Σ a_j/2 (w_j − z_j)².
    Prox {
        #[command(flatten)]
        common: Common,
        /// a_j; defaults to all ones.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weights: Option<Vec<f64>>,
        /// z_j.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        centers: Vec<f64>,
        #[arg(long, value_enum, default_value_t = ProxAlgo::Minnorm)]
        algo: ProxAlgo,
        /// Levels at which to report the threshold minimizers.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Vec<f64>,
        #[arg(long, default_value_t = 1e-12)]
        eps: f64,
    },
    /// Largest λ with s0 + λ·direction in P(F).
    Linesearch {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        direction: Vec<f64>,
        /// Starting point; defaults to 0.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        s0: Option<Vec<f64>>,
    },
    /// Prints the spec as an explicit table.
    Dump {
        spec: PathBuf,
    },
    /// Prints a seeded random submodular function as an explicit spec.
    Gen {
        /// cut, cover or logdet, optionally with a +modular suffix.
        #[arg(long, default_value = "cut")]
        family: String,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match commands::run(cli.command, argv) {
        Ok(line) => {
            println!("{line}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
