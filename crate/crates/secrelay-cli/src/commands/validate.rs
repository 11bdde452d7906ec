//! `validate`: numeric audit suites. Each suite prints one line per checked
//! property with the measured slack; the command exits nonzero if anything
//! fails.

use crate::args::ValidateArgs;
use crate::config::FileConfig;
use crate::manifest::{now_utc, sha256_hex, OutputDigest, RunManifest};
use crate::{CliError, CliResult};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use secrelay::cellular::{direct_outage_bounds, direct_outage_single_eve, NormalizedDistance};
use secrelay::closedform::{
    df_outage_general, df_outage_optimal, df_rf_identity_residual, df_secure_optimal,
    direct_outage, rf_outage, rf_secure, PowerRatio,
};
use secrelay::montecarlo::{
    mc_cellular_direct, mc_df_outage, mc_direct_outage, mc_rf_outage, McConfig,
};
use secrelay::tolerances;
use secrelay::{Distances, PathLossExponent, PowerPair};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Params {
    pub suite: String,
    pub trials: u64,
    pub seed: u64,
    pub chunk_size: u64,
    pub output: Option<PathBuf>,
}

pub fn resolve(args: &ValidateArgs, file: &FileConfig) -> CliResult<Params> {
    let trials = crate::config::resolve(
        args.trials,
        file.get_u64("trials")?,
        McConfig::DEFAULT_TRIALS,
    );
    Ok(Params {
        suite: args.suite.clone(),
        trials,
        seed: crate::config::resolve_seed(
            args.seed,
            file.get_u64("seed")?,
            crate::config::seed_env(),
        )?,
        chunk_size: crate::config::resolve(
            args.chunk_size,
            file.get_u64("chunk-size")?,
            McConfig::DEFAULT_CHUNK_SIZE.min(trials),
        ),
        output: args.output.clone(),
    })
}

struct Check {
    line: String,
    passed: bool,
}

/// Log-uniform link distances over [0.1, 10] with alpha uniform in [2, 4],
/// the standard audit distribution.
fn random_geometry(rng: &mut ChaCha8Rng) -> (Distances, PathLossExponent) {
    let mut d = || 10f64.powf(rng.gen_range(-1.0..1.0));
    let dist = Distances::new(d(), d(), d(), d(), d()).expect("positive distances");
    let alpha = PathLossExponent::new(rng.gen_range(2.0..4.0)).expect("alpha in range");
    (dist, alpha)
}

/// Milder spread for oracle configs so estimates stay away from 0 and 1,
/// where the binomial standard error degenerates.
fn oracle_geometry(rng: &mut ChaCha8Rng) -> (Distances, PathLossExponent) {
    let mut d = || 10f64.powf(rng.gen_range(-0.6..0.6));
    let dist = Distances::new(d(), d(), d(), d(), d()).expect("positive distances");
    let alpha = PathLossExponent::new(rng.gen_range(2.0..4.0)).expect("alpha in range");
    (dist, alpha)
}

fn suite_rng(seed: u64, suite_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite_index);
    rng
}

fn identity_suite(seed: u64) -> Check {
    let mut rng = suite_rng(seed, 1);
    let n = 10_000;
    let mut max_res = 0.0f64;
    for _ in 0..n {
        let (d, a) = random_geometry(&mut rng);
        max_res = max_res.max(df_rf_identity_residual(&d, a).unwrap().abs());
    }
    let passed = max_res < tolerances::IDENTITY_RESIDUAL;
    Check {
        line: format!(
            "identity: max |residual| = {max_res:.3e} over {n} geometries (limit {:.1e})",
            tolerances::IDENTITY_RESIDUAL
        ),
        passed,
    }
}

fn ordering_suite(seed: u64) -> Check {
    let mut rng = suite_rng(seed, 2);
    let n = 10_000;
    let mut violations = 0u64;
    let mut min_gap = f64::INFINITY;
    for _ in 0..n {
        let (d, a) = random_geometry(&mut rng);
        // Strictness is asserted on the secure-connection complements, which
        // keep relative precision when both outage values round to 1.
        let q_df = df_secure_optimal(&d, a).unwrap();
        let q_rf = rf_secure(&d, a).unwrap();
        if !(q_df < q_rf) {
            violations += 1;
        }
        min_gap = min_gap.min((q_rf - q_df) / q_rf);
    }
    Check {
        line: format!(
            "ordering: {violations} violations of DF-worse-than-RF over {n} geometries (min relative gap {min_gap:.3e})"
        ),
        passed: violations == 0,
    }
}

fn optimality_suite(seed: u64) -> Check {
    let mut rng = suite_rng(seed, 3);
    let geoms = 1_000;
    let ratios = 1_000;
    let mut worst_slack = f64::NEG_INFINITY;
    for _ in 0..geoms {
        let (d, a) = random_geometry(&mut rng);
        let p_opt = df_outage_optimal(&d, a).unwrap().value();
        let mut grid_min = f64::INFINITY;
        for i in 0..ratios {
            let t = 10f64.powf(-3.0 + 6.0 * i as f64 / (ratios - 1) as f64);
            let p = df_outage_general(&d, a, PowerRatio::new(t).unwrap())
                .unwrap()
                .value();
            grid_min = grid_min.min(p);
        }
        worst_slack = worst_slack.max(p_opt - grid_min);
    }
    Check {
        line: format!(
            "optimality: worst analytic-minus-grid slack = {worst_slack:.3e} over {geoms} geometries x {ratios} ratios (limit 1.0e-9)"
        ),
        passed: worst_slack <= 1e-9,
    }
}

fn oracle_suite(seed: u64, trials: u64, chunk_size: u64) -> Check {
    let mut rng = suite_rng(seed, 4);
    let per_kind = 25;
    let mut within = 0u32;
    let mut total = 0u32;
    let mut mc_seed = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    let mut next_cfg = || {
        mc_seed = mc_seed.wrapping_add(1);
        McConfig::with_chunk_size(trials, mc_seed, chunk_size.min(trials)).unwrap()
    };

    for _ in 0..per_kind {
        let (d, a) = oracle_geometry(&mut rng);
        let ratio = 10f64.powf(rng.gen_range(-0.3..0.3));
        let power = PowerPair::new(1.0, ratio).unwrap();
        let exact = df_outage_general(&d, a, PowerRatio::new(ratio).unwrap())
            .unwrap()
            .value();
        let est = mc_df_outage(&d, a, &power, &next_cfg()).unwrap();
        total += 1;
        if (est.p_hat - exact).abs() <= tolerances::MC_SIGMA_FACTOR * est.std_error {
            within += 1;
        }
    }
    for _ in 0..per_kind {
        let (d, a) = oracle_geometry(&mut rng);
        let exact = rf_outage(&d, a).unwrap().value();
        let est = mc_rf_outage(&d, a, &next_cfg()).unwrap();
        total += 1;
        if (est.p_hat - exact).abs() <= tolerances::MC_SIGMA_FACTOR * est.std_error {
            within += 1;
        }
    }
    for _ in 0..per_kind {
        let (d, a) = oracle_geometry(&mut rng);
        let exact = direct_outage(d.d_sd, d.d_se, a).unwrap().value();
        let est = mc_direct_outage(d.d_sd, d.d_se, a, &next_cfg()).unwrap();
        total += 1;
        if (est.p_hat - exact).abs() <= tolerances::MC_SIGMA_FACTOR * est.std_error {
            within += 1;
        }
    }
    for _ in 0..per_kind {
        let x = NormalizedDistance::new(rng.gen_range(0.15..1.0f64)).unwrap();
        let a = PathLossExponent::new(rng.gen_range(2.0..4.0)).unwrap();
        let exact = direct_outage_single_eve(x, a).value();
        let est = mc_cellular_direct(x, a, 1, 1.0, &next_cfg()).unwrap();
        total += 1;
        if (est.p_hat - exact).abs() <= tolerances::MC_SIGMA_FACTOR * est.std_error {
            within += 1;
        }
    }
    Check {
        line: format!(
            "oracle: {within}/{total} Monte Carlo estimates within 3 sigma of the analytic value at {trials} trials (need >= 95)"
        ),
        passed: within >= 95,
    }
}

fn bounds_suite(seed: u64, trials: u64, chunk_size: u64) -> Check {
    let mut ok = 0u32;
    let mut total = 0u32;
    let mut detail = String::new();
    let mut mc_seed = seed.wrapping_mul(0xc2b2_ae3d_27d4_eb4f);
    for &x in &[0.25, 0.5, 1.0] {
        for &a in &[2.0, 4.0] {
            for &n in &[1u32, 2, 4, 8] {
                mc_seed = mc_seed.wrapping_add(1);
                let xn = NormalizedDistance::new(x).unwrap();
                let alpha = PathLossExponent::new(a).unwrap();
                let (lower, upper) = direct_outage_bounds(xn, alpha, n).unwrap();
                let cfg =
                    McConfig::with_chunk_size(trials, mc_seed, chunk_size.min(trials)).unwrap();
                let est = mc_cellular_direct(xn, alpha, n, 1.0, &cfg).unwrap();
                let slack = tolerances::MC_SIGMA_FACTOR * est.std_error;
                let inside = est.p_hat >= lower.value() - slack
                    && est.p_hat <= upper.value() + slack;
                let n1_match = n != 1
                    || (est.p_hat - lower.value()).abs() <= slack;
                total += 1;
                if inside && n1_match {
                    ok += 1;
                } else {
                    detail.push_str(&format!(" [x={x} alpha={a} N={n}: p={:.5}]", est.p_hat));
                }
            }
        }
    }
    Check {
        line: format!("bounds: {ok}/{total} estimates inside the N-eavesdropper sandwich{detail}"),
        passed: ok == total,
    }
}

pub fn run(params: &Params, out: &mut dyn Write) -> CliResult<()> {
    let started = now_utc();
    let suites: Vec<&str> = match params.suite.as_str() {
        "all" => vec!["identity", "ordering", "optimality", "oracle", "bounds"],
        s @ ("identity" | "ordering" | "optimality" | "oracle" | "bounds") => vec![s],
        other => {
            return Err(CliError::Usage(format!(
                "unknown suite `{other}` (identity, ordering, optimality, oracle, bounds, all)"
            )))
        }
    };

    let mut report = String::new();
    let mut all_passed = true;
    for suite in suites {
        let check = match suite {
            "identity" => identity_suite(params.seed),
            "ordering" => ordering_suite(params.seed),
            "optimality" => optimality_suite(params.seed),
            "oracle" => oracle_suite(params.seed, params.trials, params.chunk_size),
            "bounds" => bounds_suite(params.seed, params.trials, params.chunk_size),
            _ => unreachable!(),
        };
        let verdict = if check.passed { "PASS" } else { "FAIL" };
        report.push_str(&format!("{} .. {verdict}\n", check.line));
        all_passed &= check.passed;
    }
    write!(out, "{report}")?;

    if let Some(path) = &params.output {
        std::fs::write(path, &report)?;
        let manifest = RunManifest {
            command: "validate".into(),
            version: super::TOOL_VERSION.into(),
            seed: Some(params.seed),
            parameters: super::to_json(params)?,
            started_utc: started,
            finished_utc: now_utc(),
            outputs: vec![OutputDigest {
                path: path.to_string_lossy().into_owned(),
                sha256: sha256_hex(path)?,
            }],
        };
        manifest.write_for(path)?;
    }

    if all_passed {
        writeln!(out, "validate: PASS")?;
        Ok(())
    } else {
        writeln!(out, "validate: FAIL")?;
        Err(CliError::Validation("validation suite failed".into()))
    }
}
