//! Command-line front end: determinant and Painlevé evaluation, law
//! curves, verification suites, and Monte Carlo runs, with JSON/CSV
//! export and a fixed exit-code map (2 validation, 3 solver,
//! 4 tolerance, 5 verification).

mod commands;
mod output;
mod verify;

pub use verify::{
    admissible_weight_tuples, identity_grid, montecarlo_configs, run_suite, suite_hankel,
    suite_identity, suite_montecarlo, suite_reductions, VerifyCase, VerifyReport, HANKEL_TOL,
    IDENTITY_TOL, MC_SIGMA,
};

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

use crate::error::Error;

#[derive(Parser)]
#[command(name = "airygap", version, about = "Airy-kernel determinants, coupled Painlevé II, and near-extreme eigenvalue laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct PartitionArgs {
    /// Interval endpoints x_1 > ... > x_k, comma-separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub x: Vec<f64>,
    /// Occupancy weights s_1, ..., s_k in [0, 1], comma-separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub s: Vec<f64>,
}

#[derive(Args)]
pub struct DetArgs {
    #[command(flatten)]
    pub partition: PartitionArgs,
    /// Quadrature nodes per unit length
    #[arg(long, default_value_t = crate::fredholm::DEFAULT_NODES_PER_UNIT)]
    pub nodes: f64,
    /// Truncation length beyond x_1
    #[arg(long = "L", alias = "l", default_value_t = crate::fredholm::DEFAULT_L_TRUNC)]
    pub l: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct PiiArgs {
    #[command(flatten)]
    pub partition: PartitionArgs,
    /// Anchoring point of the Airy boundary data
    #[arg(long = "T", alias = "t", default_value_t = crate::painleve::DEFAULT_T)]
    pub t: f64,
    /// Integrator tolerance
    #[arg(long, default_value_t = crate::painleve::DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Law {
    /// P(no particles in (x2, x1)), swept over x1
    Gap,
    /// P(zeta_ell < x), swept over x
    Kth,
    /// Joint CDF of ranked particles, swept over the first threshold
    Joint,
    /// P(zeta_1 < x1 | largest thinned particle < x2), swept over x1
    Conditional,
    /// P(zeta_1 - zeta_2 > sigma), swept over sigma
    Spacing,
    /// P(zeta_1 + zeta_2 < sigma), swept over sigma
    Sum2,
}

#[derive(Args)]
pub struct DistArgs {
    /// Law to evaluate
    #[arg(long, value_enum)]
    pub law: Law,
    /// Sweep grid as lo,hi,points
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub grid: Vec<f64>,
    /// Fixed thresholds where the law needs them
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x: Vec<f64>,
    /// Fixed weights where the law needs them (thinning weight)
    #[arg(long, value_delimiter = ',')]
    pub s: Vec<f64>,
    /// Rank for the kth-largest law
    #[arg(long)]
    pub ell: Option<usize>,
    /// Ranks for the joint law, comma-separated increasing
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Theorem 1.1 identity grid: Painlevé integral vs determinant
    Identity,
    /// Theorem 1.2 reduction rates
    Reductions,
    /// Finite-n determinant vs Hankel ratio
    Hankel,
    /// GUE Monte Carlo against analytic values
    Montecarlo,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Suite to run
    #[arg(value_enum)]
    pub suite: Suite,
    /// Seed for randomized case draws
    #[arg(long, default_value_t = 20_260_823)]
    pub seed: u64,
    /// Sample count for the Monte Carlo suite
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct McArgs {
    /// Matrix size
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    /// Number of sampled spectra
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Master seed for the ensemble
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub partition: PartitionArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Fredholm determinant F(x; s) on the Nyström scheme
    Det(DetArgs),
    /// Coupled Painlevé II solve and Tracy-Widom-type log-integral
    Pii(PiiArgs),
    /// Evaluate a probability law on a grid and emit a curve file
    Dist(DistArgs),
    /// Run a verification suite and report per-case numbers
    Verify(VerifyArgs),
    /// GUE Monte Carlo estimate of the generating function
    Mc(McArgs),
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Domain(_) | Error::Config(_) => 2,
        Error::Tolerance(_) => 4,
        _ => 3,
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Det(args) => commands::cmd_det(&args),
        Command::Pii(args) => commands::cmd_pii(&args),
        Command::Dist(args) => commands::cmd_dist(&args),
        Command::Verify(args) => verify::cmd_verify(&args),
        Command::Mc(args) => commands::cmd_mc(&args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
