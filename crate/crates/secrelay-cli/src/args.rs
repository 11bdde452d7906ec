//! Command-line definitions. Flags stay optional at this layer; the command
//! modules resolve them against the config file and built-in defaults.

use crate::output::OutputFormat;
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "secrelay",
    version,
    about = "Secure-connection analysis for two-hop relay wiretap networks",
    after_help = "Precedence for every knob: flag > config file > SECRELAY_SEED (seed only) > default."
)]
pub struct Cli {
    /// Flat key-value config file (`key = value`, `#` comments).
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Worker threads for Monte Carlo chunks (results do not depend on it).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the closed forms for one four-node layout.
    FournodeEval(EvalArgs),
    /// Relay-position outage heatmap plus refined optima (CSV/JSON).
    Fig2(Fig2Args),
    /// Optimal relay and outage versus eavesdropper distance.
    Fig3(Fig3Args),
    /// Cellular direct-transmission outage versus normalized distance.
    Fig5(Fig5Args),
    /// Cellular sector-relay placement study versus path-loss exponent.
    Fig6(Fig6Args),
    /// Run a validation suite; exits 1 if any property fails.
    Validate(ValidateArgs),
    /// Re-run a recorded manifest and byte-compare the outputs.
    Replay(ReplayArgs),
}

fn parse_point(s: &str) -> Result<(f64, f64), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `X,Y`, got `{s}`"))?;
    let x = x.trim().parse::<f64>().map_err(|e| e.to_string())?;
    let y = y.trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok((x, y))
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Source position as `X,Y`.
    #[arg(long, value_parser = parse_point, default_value = "0,0")]
    pub source: (f64, f64),
    /// Relay position as `X,Y`.
    #[arg(long, value_parser = parse_point, default_value = "0.5,0")]
    pub relay: (f64, f64),
    /// Destination position as `X,Y`.
    #[arg(long, value_parser = parse_point, default_value = "1,0")]
    pub dest: (f64, f64),
    /// Eavesdropper position as `X,Y`.
    #[arg(long, value_parser = parse_point, default_value = "0,1")]
    pub eave: (f64, f64),
    #[arg(long)]
    pub alpha: Option<f64>,
    /// df, rf, or direct.
    #[arg(long, default_value = "df")]
    pub strategy: String,
    /// Explicit DF power ratio p_r/p_s (defaults to the optimal one).
    #[arg(long)]
    pub ratio: Option<f64>,
}

#[derive(Debug, Args)]
pub struct Fig2Args {
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Heatmap cells per axis.
    #[arg(long)]
    pub resolution: Option<usize>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct Fig3Args {
    /// Path-loss exponents to sweep.
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<f64>>,
    /// Eavesdropper heights above the source-destination midpoint.
    #[arg(long, value_delimiter = ',')]
    pub eve_distances: Option<Vec<f64>>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct Fig5Args {
    /// Normalized BS-user distances in (0, 1].
    #[arg(long, value_delimiter = ',')]
    pub x_grid: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<f64>>,
    /// Eavesdropper counts; N = 1 rows are analytic, larger N uses Monte
    /// Carlo.
    #[arg(long, value_delimiter = ',')]
    pub eves: Option<Vec<u32>>,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub chunk_size: Option<u64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct Fig6Args {
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<f64>>,
    #[arg(long)]
    pub sectors: Option<u32>,
    /// Eavesdropper count recorded in the scenario; the analytic placement
    /// objective always integrates a single eavesdropper.
    #[arg(long)]
    pub eves: Option<u32>,
    /// DF power-ratio cap (p_r <= cap * p_s).
    #[arg(long)]
    pub ratio_cap: Option<f64>,
    /// Trials for the Monte Carlo check of each optimized placement.
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub chunk_size: Option<u64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// identity, ordering, optimality, oracle, bounds, or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub chunk_size: Option<u64>,
    /// Optional report file; the report always goes to stdout too.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    /// Manifest produced by a previous run.
    #[arg(long, value_name = "PATH")]
    pub manifest: PathBuf,
    /// Where to write the replayed output (defaults to a temporary file that
    /// is removed after comparison).
    #[arg(long)]
    pub output: Option<PathBuf>,
}
