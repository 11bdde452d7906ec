//! `fournode-eval`: closed forms for one explicit layout.

use crate::args::EvalArgs;
use crate::config::FileConfig;
use crate::output::fmt_sig;
use crate::{CliError, CliResult};
use secrelay::closedform::{
    df_optimal_power_ratio, df_outage_general, df_outage_optimal, df_rf_identity_residual,
    direct_outage, rf_outage, PowerRatio,
};
use secrelay::geometry::{distances_from_layout, FourNodeLayout, Point2D};
use secrelay::PathLossExponent;
use std::io::Write;

pub fn run(args: &EvalArgs, file: &FileConfig, out: &mut dyn Write) -> CliResult<()> {
    let alpha_value = crate::config::resolve(args.alpha, file.get_f64("alpha")?, 4.0);
    let alpha = PathLossExponent::new(alpha_value)?;
    let p = |(x, y): (f64, f64)| Point2D::new(x, y);
    let layout = FourNodeLayout::new(
        p(args.source)?,
        p(args.relay)?,
        p(args.dest)?,
        p(args.eave)?,
    );
    let d = distances_from_layout(&layout);

    writeln!(out, "alpha = {}", fmt_sig(alpha_value, 6))?;
    writeln!(
        out,
        "distances: d_sr = {}, d_rd = {}, d_se = {}, d_re = {}, d_sd = {}",
        fmt_sig(d.d_sr, 6),
        fmt_sig(d.d_rd, 6),
        fmt_sig(d.d_se, 6),
        fmt_sig(d.d_re, 6),
        fmt_sig(d.d_sd, 6)
    )?;

    match args.strategy.as_str() {
        "df" => {
            let opt_ratio = df_optimal_power_ratio(&d, alpha)?;
            let p_opt = df_outage_optimal(&d, alpha)?;
            writeln!(out, "strategy = df")?;
            writeln!(out, "optimal_ratio = {}", fmt_sig(opt_ratio.value(), 6))?;
            writeln!(out, "p_outage_optimal = {}", fmt_sig(p_opt.value(), 6))?;
            if let Some(r) = args.ratio {
                let p_at = df_outage_general(&d, alpha, PowerRatio::new(r)?)?;
                writeln!(out, "p_outage_at_ratio = {}", fmt_sig(p_at.value(), 6))?;
            }
            let residual = df_rf_identity_residual(&d, alpha)?;
            writeln!(out, "identity_residual = {residual:.3e}")?;
        }
        "rf" => {
            let p_rf = rf_outage(&d, alpha)?;
            writeln!(out, "strategy = rf")?;
            writeln!(out, "p_outage = {}", fmt_sig(p_rf.value(), 6))?;
            let residual = df_rf_identity_residual(&d, alpha)?;
            writeln!(out, "identity_residual = {residual:.3e}")?;
        }
        "direct" => {
            let p_direct = direct_outage(d.d_sd, d.d_se, alpha)?;
            writeln!(out, "strategy = direct")?;
            writeln!(out, "p_outage = {}", fmt_sig(p_direct.value(), 6))?;
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown strategy `{other}` (expected df, rf, or direct)"
            )));
        }
    }
    Ok(())
}
