//! `fig5`: cellular direct-transmission outage versus the normalized
//! BS-user distance, per path-loss exponent and eavesdropper count.
//! Single-eavesdropper rows are analytic; larger N is Monte Carlo.

use crate::args::Fig5Args;
use crate::config::FileConfig;
use crate::manifest::now_utc;
use crate::output::{Cell, OutputFormat, Table};
use crate::CliResult;
use secrelay::cellular::sweep_direct_outage;
use secrelay::montecarlo::McConfig;
use secrelay::PathLossExponent;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Params {
    pub x_grid: Vec<f64>,
    pub alphas: Vec<f64>,
    pub eves: Vec<u32>,
    pub trials: u64,
    pub seed: u64,
    pub chunk_size: u64,
    pub output: PathBuf,
    pub format: OutputFormat,
}

pub fn resolve(args: &Fig5Args, file: &FileConfig) -> CliResult<Params> {
    let output = args
        .output
        .clone()
        .or_else(|| file.get_str("output").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("fig5.csv"));
    let trials = crate::config::resolve(
        args.trials,
        file.get_u64("trials")?,
        McConfig::DEFAULT_TRIALS,
    );
    let seed = crate::config::resolve_seed(
        args.seed,
        file.get_u64("seed")?,
        crate::config::seed_env(),
    )?;
    Ok(Params {
        x_grid: args
            .x_grid
            .clone()
            .unwrap_or_else(|| (1..=10).map(|i| i as f64 / 10.0).collect()),
        alphas: crate::config::resolve(
            args.alphas.clone(),
            file.get_f64_list("alphas")?,
            vec![2.0, 4.0],
        ),
        eves: args.eves.clone().unwrap_or_else(|| vec![1, 2, 4, 8]),
        trials,
        seed,
        chunk_size: crate::config::resolve(
            args.chunk_size,
            file.get_u64("chunk-size")?,
            McConfig::DEFAULT_CHUNK_SIZE.min(trials),
        ),
        output,
        format: crate::config::resolve(
            args.format,
            super::fig2::parse_format(file)?,
            OutputFormat::Csv,
        ),
    })
}

pub fn run(params: &Params, out: &mut dyn Write) -> CliResult<()> {
    let started = now_utc();
    let alphas: Vec<PathLossExponent> = params
        .alphas
        .iter()
        .map(|&a| PathLossExponent::new(a))
        .collect::<Result<_, _>>()?;
    let cfg = McConfig::with_chunk_size(params.trials, params.seed, params.chunk_size)?;
    let rows = sweep_direct_outage(&params.x_grid, &alphas, &params.eves, &cfg)?;

    let mut table = Table::new(vec!["x", "alpha", "n_eves", "value", "method", "upper_bound"]);
    for row in &rows {
        table.push(vec![
            Cell::Float(row.x),
            Cell::Float(row.alpha),
            Cell::Int(row.n_eves as u64),
            Cell::Float(row.value),
            Cell::Text(row.method.to_string()),
            Cell::Float(row.upper_bound),
        ]);
    }

    crate::commands::write_output_with_manifest(
        "fig5",
        crate::commands::to_json(params)?,
        Some(params.seed),
        started,
        &table,
        &params.output,
        params.format,
    )?;
    writeln!(
        out,
        "{} rows ({} trials per Monte Carlo row, seed {}), wrote {}",
        rows.len(),
        params.trials,
        params.seed,
        params.output.display()
    )?;
    Ok(())
}
