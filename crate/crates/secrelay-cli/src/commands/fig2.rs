//! `fig2`: DF/RF outage heatmap over relay positions for the reference
//! layout S(0,0), D(1,0), E(0,1), plus one refined-optimum summary row per
//! strategy appended after the grid rows.

use crate::args::Fig2Args;
use crate::config::FileConfig;
use crate::manifest::now_utc;
use crate::output::{fmt_sig, Cell, OutputFormat, Table};
use crate::{CliError, CliResult};
use secrelay::closedform::{df_outage_optimal, rf_outage};
use secrelay::geometry::{Distances, PathLossExponent, Point2D};
use secrelay::optimizer::{optimize_relay_fournode, OptimizerConfig, SearchRegion};
use secrelay::RelayStrategy;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;

pub const GRID_MIN: f64 = -0.5;
pub const GRID_MAX: f64 = 1.5;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Params {
    pub alpha: f64,
    pub resolution: usize,
    pub output: PathBuf,
    pub format: OutputFormat,
}

pub fn resolve(args: &Fig2Args, file: &FileConfig) -> CliResult<Params> {
    let output = args
        .output
        .clone()
        .or_else(|| file.get_str("output").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("fig2.csv"));
    Ok(Params {
        alpha: crate::config::resolve(args.alpha, file.get_f64("alpha")?, 4.0),
        resolution: crate::config::resolve(args.resolution, file.get_usize("resolution")?, 64),
        output,
        format: crate::config::resolve(args.format, parse_format(file)?, OutputFormat::Csv),
    })
}

pub(crate) fn parse_format(file: &FileConfig) -> CliResult<Option<OutputFormat>> {
    match file.get_str("format") {
        None => Ok(None),
        Some("csv") => Ok(Some(OutputFormat::Csv)),
        Some("json") => Ok(Some(OutputFormat::Json)),
        Some(other) => Err(CliError::Usage(format!(
            "config key `format`: expected csv or json, got `{other}`"
        ))),
    }
}

fn nodes() -> (Point2D, Point2D, Point2D) {
    (
        Point2D { x: 0.0, y: 0.0 },
        Point2D { x: 1.0, y: 0.0 },
        Point2D { x: 0.0, y: 1.0 },
    )
}

fn outages_at(relay: Point2D, alpha: PathLossExponent) -> Option<(f64, f64)> {
    let (s, d, e) = nodes();
    let dist = Distances {
        d_sr: s.distance_to(&relay),
        d_rd: relay.distance_to(&d),
        d_se: s.distance_to(&e),
        d_re: relay.distance_to(&e),
        d_sd: s.distance_to(&d),
    };
    let p_df = df_outage_optimal(&dist, alpha).ok()?.value();
    let p_rf = rf_outage(&dist, alpha).ok()?.value();
    Some((p_df, p_rf))
}

pub fn run(params: &Params, out: &mut dyn Write) -> CliResult<()> {
    let started = now_utc();
    if params.resolution < 2 {
        return Err(CliError::Usage("resolution must be >= 2".into()));
    }
    let alpha = PathLossExponent::new(params.alpha)?;
    let (s, d, e) = nodes();

    let mut table = Table::new(vec!["x", "y", "p_df", "p_rf"]);
    let n = params.resolution;
    let step = (GRID_MAX - GRID_MIN) / n as f64;
    for ix in 0..n {
        // Cell centers keep the samples off the fixed nodes.
        let x = GRID_MIN + (ix as f64 + 0.5) * step;
        for iy in 0..n {
            let y = GRID_MIN + (iy as f64 + 0.5) * step;
            match outages_at(Point2D { x, y }, alpha) {
                Some((p_df, p_rf)) => table.push(vec![
                    Cell::Float(x),
                    Cell::Float(y),
                    Cell::Float(p_df),
                    Cell::Float(p_rf),
                ]),
                None => table.push(vec![
                    Cell::Float(x),
                    Cell::Float(y),
                    Cell::Empty,
                    Cell::Empty,
                ]),
            }
        }
    }

    let region = SearchRegion::planar(GRID_MIN, GRID_MAX, GRID_MIN, GRID_MAX)?;
    let cfg = OptimizerConfig::default();
    let mut summary = Vec::new();
    for strategy in [RelayStrategy::Df, RelayStrategy::Rf] {
        let r = optimize_relay_fournode(s, d, e, alpha, strategy, &region, &cfg)?;
        let (p_df, p_rf) = outages_at(r.relay, alpha)
            .ok_or_else(|| CliError::Usage("optimum fell on a singular node".into()))?;
        table.push(vec![
            Cell::Float(r.relay.x),
            Cell::Float(r.relay.y),
            Cell::Float(p_df),
            Cell::Float(p_rf),
        ]);
        summary.push((strategy, r));
    }

    crate::commands::write_output_with_manifest(
        "fig2",
        crate::commands::to_json(params)?,
        None,
        started,
        &table,
        &params.output,
        params.format,
    )?;

    for (strategy, r) in &summary {
        writeln!(
            out,
            "{strategy} optimum: relay = ({}, {}), outage = {}{}",
            fmt_sig(r.relay.x, 6),
            fmt_sig(r.relay.y, 6),
            fmt_sig(r.outage, 6),
            match r.power_ratio {
                Some(ratio) => format!(", power_ratio = {}", fmt_sig(ratio.value(), 6)),
                None => String::new(),
            }
        )?;
    }
    writeln!(out, "wrote {}", params.output.display())?;
    Ok(())
}
