//! Monte Carlo oracle against the analytic layer at moderate trial counts.
//! The full 100-configuration audit runs in the CLI acceptance suite.

use secrelay::cellular::{
    direct_outage_single_eve, relay_outage_at_a, CellScenario, NormalizedDistance,
};
use secrelay::closedform::{df_outage_general, rf_outage, PowerRatio};
use secrelay::montecarlo::{
    mc_cellular_direct, mc_cellular_relay, mc_df_outage, mc_direct_outage, mc_rf_outage, McConfig,
};
use secrelay::optimizer::{optimize_cellular_relay, OptimizerConfig};
use secrelay::tolerances::MC_SIGMA_FACTOR;
use secrelay::{Distances, PathLossExponent, PowerPair, RelayStrategy};

fn alpha(a: f64) -> PathLossExponent {
    PathLossExponent::new(a).unwrap()
}

#[test]
fn df_estimate_tracks_closed_form() {
    let d = Distances::new(0.47, 0.55, 1.0, 1.19, 1.0).unwrap();
    let a = alpha(4.0);
    let power = PowerPair::new(1.0, 2.0).unwrap();
    let cfg = McConfig::new(400_000, 2001).unwrap();
    let est = mc_df_outage(&d, a, &power, &cfg).unwrap();
    let exact = df_outage_general(&d, a, PowerRatio::new(2.0).unwrap())
        .unwrap()
        .value();
    assert!(
        (est.p_hat - exact).abs() <= MC_SIGMA_FACTOR * est.std_error,
        "{} vs {exact}",
        est.p_hat
    );
}

#[test]
fn rf_estimate_tracks_closed_form() {
    let d = Distances::new(0.8, 1.3, 1.7, 0.9, 1.0).unwrap();
    let a = alpha(2.6);
    let cfg = McConfig::new(400_000, 2002).unwrap();
    let est = mc_rf_outage(&d, a, &cfg).unwrap();
    let exact = rf_outage(&d, a).unwrap().value();
    assert!((est.p_hat - exact).abs() <= MC_SIGMA_FACTOR * est.std_error);
}

#[test]
fn cellular_direct_tracks_quadrature_for_general_alpha() {
    let x = NormalizedDistance::new(0.6).unwrap();
    let a = alpha(3.4);
    let cfg = McConfig::new(400_000, 2003).unwrap();
    let est = mc_cellular_direct(x, a, 1, 1.0, &cfg).unwrap();
    let exact = direct_outage_single_eve(x, a).value();
    assert!((est.p_hat - exact).abs() <= MC_SIGMA_FACTOR * est.std_error);
}

#[test]
fn direct_small_probability_regime() {
    let a = alpha(4.0);
    let cfg = McConfig::new(4_000_000, 2004).unwrap();
    let est = mc_direct_outage(1.0, 10.0, a, &cfg).unwrap();
    let exact = 1.0 / 10_001.0;
    // Use the exact binomial sigma; p_hat*(1-p_hat) underestimates it when
    // only a few hundred outages occur.
    let sigma = (exact * (1.0 - exact) / cfg.trials as f64).sqrt();
    assert!((est.p_hat - exact).abs() <= MC_SIGMA_FACTOR * sigma);
}

#[test]
fn optimized_rf_sector_relay_matches_mc_and_beats_direct() {
    let scenario = CellScenario::new(1.0, 6, 1, alpha(4.0), 0.0, 1.0).unwrap();
    let cfg = OptimizerConfig {
        grid_points_per_axis: 16,
        ..OptimizerConfig::default()
    };
    let opt = optimize_cellular_relay(&scenario, RelayStrategy::Rf, &cfg).unwrap();
    assert!(opt.outage < std::f64::consts::FRAC_PI_4);

    let at_opt = CellScenario {
        relay_distance: opt.relay_distance,
        ..scenario
    };
    let quad = relay_outage_at_a(&at_opt, RelayStrategy::Rf, PowerRatio::new(1.0).unwrap())
        .unwrap()
        .value();
    let est = mc_cellular_relay(
        &at_opt,
        RelayStrategy::Rf,
        PowerRatio::new(1.0).unwrap(),
        std::f64::consts::PI / 6.0,
        &McConfig::new(400_000, 2005).unwrap(),
    )
    .unwrap();
    assert!(
        (est.p_hat - quad).abs() <= MC_SIGMA_FACTOR * est.std_error,
        "mc {} vs quadrature {quad}",
        est.p_hat
    );
}

#[test]
fn cellular_df_quadrature_matches_mc() {
    let scenario = CellScenario::new(1.0, 6, 1, alpha(3.0), 0.5, 1.0).unwrap();
    let ratio = PowerRatio::new(0.8).unwrap();
    let quad = relay_outage_at_a(&scenario, RelayStrategy::Df, ratio)
        .unwrap()
        .value();
    let est = mc_cellular_relay(
        &scenario,
        RelayStrategy::Df,
        ratio,
        std::f64::consts::PI / 6.0,
        &McConfig::new(400_000, 2006).unwrap(),
    )
    .unwrap();
    assert!(
        (est.p_hat - quad).abs() <= MC_SIGMA_FACTOR * est.std_error,
        "mc {} vs quadrature {quad}",
        est.p_hat
    );
}

#[test]
fn rf_indicator_shares_draws_with_df_ordering() {
    // With disjoint confidence intervals the RF estimate must sit below DF.
    let d = Distances::new(0.5, 0.6, 1.1, 1.2, 1.0).unwrap();
    let a = alpha(3.0);
    let cfg = McConfig::new(400_000, 2007).unwrap();
    let rf = mc_rf_outage(&d, a, &cfg).unwrap();
    let ratio = secrelay::closedform::df_optimal_power_ratio(&d, a).unwrap();
    let power = PowerPair::new(1.0, ratio.value()).unwrap();
    let df = mc_df_outage(&d, a, &power, &cfg).unwrap();
    if rf.ci95_high < df.ci95_low || df.ci95_high < rf.ci95_low {
        assert!(rf.p_hat < df.p_hat);
    }
}
