//! `fig3`: optimal relay and minimal outage as the eavesdropper retreats
//! along the perpendicular bisector of the source-destination segment,
//! for each scheme and path-loss exponent.

use crate::args::Fig3Args;
use crate::config::FileConfig;
use crate::manifest::now_utc;
use crate::output::{Cell, OutputFormat, Table};
use crate::CliResult;
use secrelay::geometry::{PathLossExponent, Point2D};
use secrelay::optimizer::{
    sweep_eavesdropper_distance, OptimizerConfig, Scheme, SearchRegion,
};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Params {
    pub alphas: Vec<f64>,
    pub eve_distances: Vec<f64>,
    pub output: PathBuf,
    pub format: OutputFormat,
}

pub fn resolve(args: &Fig3Args, file: &FileConfig) -> CliResult<Params> {
    let output = args
        .output
        .clone()
        .or_else(|| file.get_str("output").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("fig3.csv"));
    Ok(Params {
        alphas: crate::config::resolve(
            args.alphas.clone(),
            file.get_f64_list("alphas")?,
            vec![2.0, 3.0, 4.0],
        ),
        eve_distances: args
            .eve_distances
            .clone()
            .unwrap_or_else(|| vec![1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0]),
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
    let source = Point2D { x: 0.0, y: 0.0 };
    let destination = Point2D { x: 1.0, y: 0.0 };
    let path: Vec<Point2D> = params
        .eve_distances
        .iter()
        .map(|&h| Point2D { x: 0.5, y: h })
        .collect();
    let alphas: Vec<PathLossExponent> = params
        .alphas
        .iter()
        .map(|&a| PathLossExponent::new(a))
        .collect::<Result<_, _>>()?;

    let rows = sweep_eavesdropper_distance(
        source,
        destination,
        &path,
        &alphas,
        &[Scheme::Direct, Scheme::Df, Scheme::Rf],
        &SearchRegion::default_fournode(),
        &OptimizerConfig::default(),
    )?;

    let mut table = Table::new(vec![
        "eave_distance",
        "alpha",
        "strategy",
        "optimal_relay_x",
        "optimal_relay_y",
        "outage",
    ]);
    for row in &rows {
        table.push(vec![
            Cell::Float(row.eave_distance),
            Cell::Float(row.alpha),
            Cell::Text(row.scheme.to_string()),
            row.relay.map_or(Cell::Empty, |r| Cell::Float(r.x)),
            row.relay.map_or(Cell::Empty, |r| Cell::Float(r.y)),
            Cell::Float(row.outage),
        ]);
    }

    crate::commands::write_output_with_manifest(
        "fig3",
        crate::commands::to_json(params)?,
        None,
        started,
        &table,
        &params.output,
        params.format,
    )?;
    writeln!(out, "{} rows, wrote {}", rows.len(), params.output.display())?;
    Ok(())
}
