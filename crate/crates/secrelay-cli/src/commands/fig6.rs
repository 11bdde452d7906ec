//! `fig6`: sector-relay placement study at the worst-case cell-edge user
//! (point A) versus the path-loss exponent. For each alpha the RF and DF
//! placements are optimized against the quadrature objective and
//! cross-checked by Monte Carlo.

use crate::args::Fig6Args;
use crate::config::FileConfig;
use crate::manifest::now_utc;
use crate::output::{fmt_sig, Cell, OutputFormat, Table};
use crate::CliResult;
use secrelay::cellular::{cell_edge_constant, direct_outage_single_eve, CellScenario, NormalizedDistance};
use secrelay::closedform::PowerRatio;
use secrelay::montecarlo::{mc_cellular_relay, McConfig};
use secrelay::optimizer::{optimize_cellular_relay, OptimizerConfig};
use secrelay::tolerances::MC_SIGMA_FACTOR;
use secrelay::{PathLossExponent, RelayStrategy};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Params {
    pub alphas: Vec<f64>,
    pub sectors: u32,
    pub eves: u32,
    pub ratio_cap: f64,
    pub trials: u64,
    pub seed: u64,
    pub chunk_size: u64,
    pub output: PathBuf,
    pub format: OutputFormat,
}

pub fn resolve(args: &Fig6Args, file: &FileConfig) -> CliResult<Params> {
    let output = args
        .output
        .clone()
        .or_else(|| file.get_str("output").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("fig6.csv"));
    let trials = crate::config::resolve(args.trials, file.get_u64("trials")?, 200_000);
    let seed = crate::config::resolve_seed(
        args.seed,
        file.get_u64("seed")?,
        crate::config::seed_env(),
    )?;
    Ok(Params {
        alphas: crate::config::resolve(
            args.alphas.clone(),
            file.get_f64_list("alphas")?,
            vec![2.5, 3.0, 3.5, 4.0],
        ),
        sectors: crate::config::resolve(args.sectors, file.get_u32("sectors")?, 6),
        eves: crate::config::resolve(args.eves, file.get_u32("eves")?, 1),
        ratio_cap: crate::config::resolve(args.ratio_cap, file.get_f64("ratio-cap")?, 1.0),
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

/// Search resolutions: RF is a 1-D problem, DF pays one quadrature per grid
/// node in 2-D, so it gets a coarser grid before refinement.
const RF_GRID: usize = 32;
const DF_GRID: usize = 14;

pub fn run(params: &Params, out: &mut dyn Write) -> CliResult<()> {
    let started = now_utc();
    let mut table = Table::new(vec![
        "alpha",
        "strategy",
        "optimal_dbr_over_R",
        "power_ratio",
        "outage",
        "direct_baseline",
    ]);
    let mc_cfg = McConfig::with_chunk_size(params.trials, params.seed, params.chunk_size)?;

    for &a in &params.alphas {
        let alpha = PathLossExponent::new(a)?;
        let direct_baseline = cell_edge_constant(alpha)
            .map(|p| p.value())
            .unwrap_or_else(|_| {
                direct_outage_single_eve(NormalizedDistance::new(1.0).unwrap(), alpha).value()
            });
        let scenario = CellScenario::new(1.0, params.sectors, params.eves, alpha, 0.0, params.ratio_cap)?;

        for strategy in [RelayStrategy::Rf, RelayStrategy::Df] {
            let cfg = OptimizerConfig {
                grid_points_per_axis: match strategy {
                    RelayStrategy::Rf => RF_GRID,
                    RelayStrategy::Df => DF_GRID,
                },
                x_tolerance: 1e-5,
                f_tolerance: 1e-9,
                ..OptimizerConfig::default()
            };
            let r = optimize_cellular_relay(&scenario, strategy, &cfg)?;
            table.push(vec![
                Cell::Float(a),
                Cell::Text(strategy.to_string()),
                Cell::Float(r.normalized_relay_distance),
                r.power_ratio
                    .map_or(Cell::Empty, |p| Cell::Float(p.value())),
                Cell::Float(r.outage),
                Cell::Float(direct_baseline),
            ]);

            // Monte Carlo check of the optimized placement.
            let at_opt = CellScenario {
                relay_distance: r.relay_distance,
                ..scenario
            };
            let ratio = r.power_ratio.unwrap_or(PowerRatio::new(1.0)?);
            let est = mc_cellular_relay(
                &at_opt,
                strategy,
                ratio,
                std::f64::consts::PI / params.sectors as f64,
                &mc_cfg,
            )?;
            let agrees = params.eves != 1
                || (est.p_hat - r.outage).abs() <= MC_SIGMA_FACTOR * est.std_error;
            writeln!(
                out,
                "alpha {}: {} optimum d_br/R = {}, outage = {} (direct {}), mc {} +- {} {}",
                fmt_sig(a, 3),
                strategy,
                fmt_sig(r.normalized_relay_distance, 4),
                fmt_sig(r.outage, 6),
                fmt_sig(direct_baseline, 6),
                fmt_sig(est.p_hat, 6),
                fmt_sig(est.std_error, 2),
                if agrees { "ok" } else { "DISAGREES" },
            )?;
        }
    }

    crate::commands::write_output_with_manifest(
        "fig6",
        crate::commands::to_json(params)?,
        Some(params.seed),
        started,
        &table,
        &params.output,
        params.format,
    )?;
    writeln!(out, "wrote {}", params.output.display())?;
    Ok(())
}
