//! Brute-force fading oracle.
//!
//! Every analytic result in this crate is cross-checkable against a seeded
//! Monte Carlo estimate: draw unit-exponential squared channel magnitudes
//! (and, for cellular cases, eavesdropper positions uniform on the cell
//! disk), evaluate the per-trial outage indicator, and count.
//!
//! Reproducibility contract: trials are partitioned into fixed chunks of
//! `chunk_size`; chunk i runs on ChaCha stream i of the seed, so the estimate
//! is bit-identical for a given `(seed, trials, chunk_size)` no matter how
//! many worker threads execute the chunks. Outage counts are integers, so
//! accumulation order cannot change the result.

use crate::cellular::{CellScenario, NormalizedDistance};
use crate::closedform::PowerRatio;
use crate::error::Error;
use crate::geometry::{gain_means, Distances, PathLossExponent, PowerPair};
use crate::RelayStrategy;
use crate::Result;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Trial count, seed, and the chunk granularity that fixes the
/// reproducibility partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub trials: u64,
    pub seed: u64,
    pub chunk_size: u64,
}

impl McConfig {
    pub const DEFAULT_TRIALS: u64 = 1_000_000;
    pub const DEFAULT_CHUNK_SIZE: u64 = 10_000;

    pub fn new(trials: u64, seed: u64) -> Result<Self> {
        Self::with_chunk_size(trials, seed, Self::DEFAULT_CHUNK_SIZE.min(trials.max(1)))
    }

    pub fn with_chunk_size(trials: u64, seed: u64, chunk_size: u64) -> Result<Self> {
        if trials < 1 {
            return Err(Error::InvalidConfig("trials must be >= 1".into()));
        }
        if chunk_size < 1 || chunk_size > trials {
            return Err(Error::InvalidConfig(format!(
                "chunk_size {chunk_size} must be in [1, trials = {trials}]"
            )));
        }
        Ok(Self {
            trials,
            seed,
            chunk_size,
        })
    }
}

/// A Monte Carlo probability estimate with binomial uncertainty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub p_hat: f64,
    pub trials: u64,
    /// `sqrt(p_hat (1 - p_hat) / trials)`
    pub std_error: f64,
    /// Normal-approximation 95% interval, clamped to [0, 1].
    pub ci95_low: f64,
    pub ci95_high: f64,
}

impl McEstimate {
    fn from_count(outages: u64, trials: u64) -> Self {
        let p_hat = outages as f64 / trials as f64;
        let std_error = (p_hat * (1.0 - p_hat) / trials as f64).sqrt();
        Self {
            p_hat,
            trials,
            std_error,
            ci95_low: (p_hat - 1.96 * std_error).max(0.0),
            ci95_high: (p_hat + 1.96 * std_error).min(1.0),
        }
    }
}

/// Squared channel magnitudes of the four relay-path links for one trial,
/// each unit-exponential before path-loss scaling.
#[derive(Debug, Clone, Copy)]
pub struct FadingDraw {
    pub g_sr: f64,
    pub g_rd: f64,
    pub g_se: f64,
    pub g_re: f64,
}

impl FadingDraw {
    pub fn sample<R: Rng>(rng: &mut R) -> Self {
        Self {
            g_sr: exp_draw(rng),
            g_rd: exp_draw(rng),
            g_se: exp_draw(rng),
            g_re: exp_draw(rng),
        }
    }
}

/// Unit-exponential via inverse CDF, `-ln u` with `u` uniform on (0, 1].
///
/// `gen::<f64>()` yields [0, 1), so `1 - gen` is never zero and the log is
/// finite; the draw can be exactly 0 (when `gen` returns 0), which outage
/// indicators must tolerate.
#[inline]
pub fn exp_draw<R: Rng>(rng: &mut R) -> f64 {
    -(1.0 - rng.gen::<f64>()).ln()
}

/// Runs `cfg.trials` of `is_outage` in seed-and-chunk-indexed substreams and
/// tallies outages. Chunks execute in parallel; the count is worker-count
/// independent.
fn estimate<F>(cfg: &McConfig, is_outage: F) -> McEstimate
where
    F: Fn(&mut ChaCha8Rng) -> bool + Sync,
{
    let n_chunks = cfg.trials.div_ceil(cfg.chunk_size);
    let outages: u64 = (0..n_chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(chunk);
            let lo = chunk * cfg.chunk_size;
            let hi = (lo + cfg.chunk_size).min(cfg.trials);
            let mut count = 0u64;
            for _ in lo..hi {
                if is_outage(&mut rng) {
                    count += 1;
                }
            }
            count
        })
        .sum();
    McEstimate::from_count(outages, cfg.trials)
}

/// Received power `p * g / d^alpha` with the zero-distance limit made
/// explicit: a zero-length link has infinite mean gain.
#[inline]
fn received(mean_gain: f64, g: f64) -> f64 {
    if mean_gain.is_infinite() {
        f64::INFINITY
    } else {
        mean_gain * g
    }
}

/// DF outage estimate: outage iff
/// `min(p_s g_sr/d_sr^a, p_r g_rd/d_rd^a) <= p_s g_se/d_se^a + p_r g_re/d_re^a`
/// (the eavesdropper combines both hops; equality counts as outage).
pub fn mc_df_outage(
    dist: &Distances,
    alpha: PathLossExponent,
    power: &PowerPair,
    cfg: &McConfig,
) -> Result<McEstimate> {
    let m = gain_means(dist, alpha, power)?;
    Ok(estimate(cfg, move |rng| {
        let f = FadingDraw::sample(rng);
        let legit = (m.sr * f.g_sr).min(m.rd * f.g_rd);
        legit <= m.se * f.g_se + m.re * f.g_re
    }))
}

/// RF outage estimate: outage iff either hop fails its private race,
/// `g_sr/d_sr^a <= g_se/d_se^a` or `g_rd/d_rd^a <= g_re/d_re^a`.
/// Transmit powers never enter the indicator.
pub fn mc_rf_outage(
    dist: &Distances,
    alpha: PathLossExponent,
    cfg: &McConfig,
) -> Result<McEstimate> {
    let unit = PowerPair::new(1.0, 1.0).expect("unit powers are valid");
    let m = gain_means(dist, alpha, &unit)?;
    Ok(estimate(cfg, move |rng| {
        let f = FadingDraw::sample(rng);
        !(m.sr * f.g_sr > m.se * f.g_se && m.rd * f.g_rd > m.re * f.g_re)
    }))
}

/// Direct-transmission outage estimate: outage iff
/// `g_sd/d_sd^a <= g_se/d_se^a`.
pub fn mc_direct_outage(
    d_sd: f64,
    d_se: f64,
    alpha: PathLossExponent,
    cfg: &McConfig,
) -> Result<McEstimate> {
    for (link, d) in [("source-destination", d_sd), ("source-eavesdropper", d_se)] {
        if d <= 0.0 {
            return Err(Error::DegenerateLink { link });
        }
    }
    let inv_sd = 1.0 / alpha.pow(d_sd);
    let inv_se = 1.0 / alpha.pow(d_se);
    Ok(estimate(cfg, move |rng| {
        let g_sd = exp_draw(rng);
        let g_se = exp_draw(rng);
        inv_sd * g_sd <= inv_se * g_se
    }))
}

/// Uniform-on-disk radius with density `2t/R^2`: `R sqrt(u)`, u in (0, 1].
#[inline]
fn disk_radius<R: Rng>(rng: &mut R, cell_radius: f64) -> f64 {
    cell_radius * (1.0 - rng.gen::<f64>()).sqrt()
}

/// Direct-transmission outage for a user at normalized distance `x` with N
/// non-cooperative eavesdroppers uniform on the disk: outage iff the
/// strongest eavesdropper beats the user,
/// `g_sd/d_sd^a <= max_i g_se_i/d_se_i^a`.
///
/// Per trial, the draw order is the user's fading, then one (radius, fading)
/// pair per eavesdropper.
pub fn mc_cellular_direct(
    x: NormalizedDistance,
    alpha: PathLossExponent,
    n_eves: u32,
    cell_radius: f64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    if n_eves < 1 {
        return Err(Error::Domain {
            name: "n_eves",
            value: n_eves as f64,
            requirement: ">= 1",
        });
    }
    if !(cell_radius.is_finite() && cell_radius > 0.0) {
        return Err(Error::Domain {
            name: "cell_radius",
            value: cell_radius,
            requirement: "> 0 and finite",
        });
    }
    let d_sd = x.value() * cell_radius;
    let inv_sd = 1.0 / alpha.pow(d_sd);
    Ok(estimate(cfg, move |rng| {
        let user = inv_sd * exp_draw(rng);
        let mut strongest = 0.0f64;
        for _ in 0..n_eves {
            let t = disk_radius(rng, cell_radius);
            let g = exp_draw(rng);
            strongest = strongest.max(g / alpha.pow(t));
        }
        user <= strongest
    }))
}

/// Relay-assisted outage for a cell-edge user at `mu_angle_offset` from the
/// serving relay's bisector (point A is `pi / sectors`), with
/// `scenario.eavesdroppers` uniform on the disk.
///
/// DF applies the fixed `power_ratio` (capped by the scenario) and declares
/// outage against the strongest per-eavesdropper two-hop combination; RF
/// requires both hops to beat every eavesdropper and ignores powers. A
/// zero-length hop is almost surely secure (infinite received power).
///
/// Per trial, the draw order is `g_sr`, `g_rd`, then one
/// (radius, angle, g_se, g_re) quadruple per eavesdropper.
pub fn mc_cellular_relay(
    scenario: &CellScenario,
    strategy: RelayStrategy,
    power_ratio: PowerRatio,
    mu_angle_offset: f64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    if strategy == RelayStrategy::Df && power_ratio.value() > scenario.power_ratio_cap {
        return Err(Error::RatioAboveCap {
            ratio: power_ratio.value(),
            cap: scenario.power_ratio_cap,
        });
    }
    let relay = scenario.relay_position();
    let user = scenario.edge_user_position(mu_angle_offset);
    let alpha = scenario.alpha;
    let n_eves = scenario.eavesdroppers;
    let cell_radius = scenario.radius;
    // Only the ratio is observable; normalize p_s to 1.
    let p_r = power_ratio.value();
    let d_sr_a = alpha.pow(scenario.relay_distance);
    let d_rd_a = alpha.pow(relay.distance_to(&user));
    let inv_sr = if d_sr_a == 0.0 { f64::INFINITY } else { 1.0 / d_sr_a };
    let inv_rd = if d_rd_a == 0.0 { f64::INFINITY } else { 1.0 / d_rd_a };

    Ok(estimate(cfg, move |rng| {
        let g_sr = exp_draw(rng);
        let g_rd = exp_draw(rng);
        let legit = match strategy {
            RelayStrategy::Df => received(inv_sr, g_sr).min(received(p_r * inv_rd, g_rd)),
            RelayStrategy::Rf => f64::NAN, // unused; RF compares per hop below
        };
        let mut outage = false;
        for _ in 0..n_eves {
            let t = disk_radius(rng, cell_radius);
            let theta = 2.0 * std::f64::consts::PI * rng.gen::<f64>();
            let eve_x = t * theta.cos();
            let eve_y = t * theta.sin();
            let d_re = (eve_x - relay.x).hypot(eve_y - relay.y);
            let g_se = exp_draw(rng);
            let g_re = exp_draw(rng);
            let eve_se = g_se / alpha.pow(t);
            let eve_re = g_re / alpha.pow(d_re);
            let this_eve_wins = match strategy {
                RelayStrategy::Df => legit <= eve_se + p_r * eve_re,
                RelayStrategy::Rf => {
                    !(received(inv_sr, g_sr) > eve_se && received(inv_rd, g_rd) > eve_re)
                }
            };
            outage = outage || this_eve_wins;
        }
        outage
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform;
    use crate::tolerances::MC_SIGMA_FACTOR;

    fn alpha(a: f64) -> PathLossExponent {
        PathLossExponent::new(a).unwrap()
    }

    fn dist(d_sr: f64, d_rd: f64, d_se: f64, d_re: f64) -> Distances {
        Distances::new(d_sr, d_rd, d_se, d_re, 1.0).unwrap()
    }

    fn cfg(trials: u64, seed: u64) -> McConfig {
        McConfig::new(trials, seed).unwrap()
    }

    #[test]
    fn exponential_sampling_mean_is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 1_000_000;
        let sum: f64 = (0..n).map(|_| exp_draw(&mut rng)).sum();
        assert!((sum / n as f64 - 1.0).abs() < 5e-3);
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let d = dist(0.5, 0.5, 1.0, 1.1);
        let c = cfg(30_000, 99);
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| mc_rf_outage(&d, alpha(3.0), &c).unwrap())
        };
        let a = run(1);
        let b = run(4);
        assert_eq!(a.p_hat.to_bits(), b.p_hat.to_bits());
        assert_eq!(a, b);
    }

    #[test]
    fn chunking_is_part_of_the_key() {
        let d = dist(0.5, 0.5, 1.0, 1.1);
        let a = mc_rf_outage(
            &d,
            alpha(3.0),
            &McConfig::with_chunk_size(20_000, 7, 1_000).unwrap(),
        )
        .unwrap();
        let b = mc_rf_outage(
            &d,
            alpha(3.0),
            &McConfig::with_chunk_size(20_000, 7, 1_000).unwrap(),
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn df_symmetric_unit_geometry_matches_closed_form() {
        let d = dist(1.0, 1.0, 1.0, 1.0);
        let est = mc_df_outage(
            &d,
            alpha(2.0),
            &PowerPair::new(1.0, 1.0).unwrap(),
            &cfg(1_000_000, 42),
        )
        .unwrap();
        assert!((est.p_hat - 8.0 / 9.0).abs() < MC_SIGMA_FACTOR * est.std_error);
    }

    #[test]
    fn df_scale_invariance_in_absolute_power() {
        // Identical seeds share fading draws, so the per-trial indicator and
        // hence the whole estimate must be bit-identical under (c ps, c pr).
        let d = dist(0.7, 0.9, 1.3, 1.2);
        let c = cfg(200_000, 3);
        let a = mc_df_outage(&d, alpha(3.0), &PowerPair::new(1.0, 2.0).unwrap(), &c).unwrap();
        let b = mc_df_outage(&d, alpha(3.0), &PowerPair::new(2.0, 4.0).unwrap(), &c).unwrap();
        let joint = (a.std_error.powi(2) + b.std_error.powi(2)).sqrt();
        assert!((a.p_hat - b.p_hat).abs() <= MC_SIGMA_FACTOR * joint);
        assert_eq!(a.p_hat.to_bits(), b.p_hat.to_bits());
    }

    #[test]
    fn rf_power_free_and_fair_race() {
        let d = dist(0.8, 1.1, 0.8, 1.1);
        let est = mc_rf_outage(&d, alpha(2.0), &cfg(1_000_000, 17)).unwrap();
        assert!((est.p_hat - 0.75).abs() < MC_SIGMA_FACTOR * est.std_error);
    }

    #[test]
    fn direct_unit_distance_is_half() {
        let est = mc_direct_outage(1.0, 1.0, alpha(4.0), &cfg(1_000_000, 8)).unwrap();
        assert!((est.p_hat - 0.5).abs() < MC_SIGMA_FACTOR * est.std_error);
    }

    #[test]
    fn direct_far_eavesdropper_vanishes() {
        let est = mc_direct_outage(1.0, 1e6, alpha(2.0), &cfg(1_000_000, 8)).unwrap();
        assert_eq!(est.p_hat, 0.0);
    }

    #[test]
    fn cellular_direct_cell_edge_constants() {
        let x = NormalizedDistance::new(1.0).unwrap();
        for (a, expect) in [(4.0, std::f64::consts::FRAC_PI_4), (2.0, std::f64::consts::LN_2)] {
            let est = mc_cellular_direct(x, alpha(a), 1, 1.0, &cfg(1_000_000, 23)).unwrap();
            assert!(
                (est.p_hat - expect).abs() < MC_SIGMA_FACTOR * est.std_error,
                "alpha {a}: {} vs {expect}",
                est.p_hat
            );
        }
    }

    #[test]
    fn cellular_direct_rejects_bad_inputs() {
        let x = NormalizedDistance::new(0.5).unwrap();
        assert!(mc_cellular_direct(x, alpha(2.0), 0, 1.0, &cfg(10, 1)).is_err());
        assert!(mc_cellular_direct(x, alpha(2.0), 1, 0.0, &cfg(10, 1)).is_err());
    }

    #[test]
    fn cellular_relay_at_base_station_matches_direct() {
        let sc = CellScenario::new(1.0, 6, 1, alpha(4.0), 0.0, 1.0).unwrap();
        let ratio = PowerRatio::new(1.0).unwrap();
        let offset = std::f64::consts::PI / 6.0;
        let relay_est =
            mc_cellular_relay(&sc, RelayStrategy::Rf, ratio, offset, &cfg(500_000, 31)).unwrap();
        let direct_est = mc_cellular_direct(
            NormalizedDistance::new(1.0).unwrap(),
            alpha(4.0),
            1,
            1.0,
            &cfg(500_000, 32),
        )
        .unwrap();
        let joint = (relay_est.std_error.powi(2) + direct_est.std_error.powi(2)).sqrt();
        assert!((relay_est.p_hat - direct_est.p_hat).abs() < MC_SIGMA_FACTOR * joint);
    }

    #[test]
    fn cellular_relay_on_user_matches_direct_at_relay_distance() {
        // User on the bisector (offset 0) with the relay on top of it.
        let sc = CellScenario::new(1.0, 6, 1, alpha(4.0), 1.0, 1.0).unwrap();
        let ratio = PowerRatio::new(1.0).unwrap();
        let relay_est =
            mc_cellular_relay(&sc, RelayStrategy::Rf, ratio, 0.0, &cfg(500_000, 33)).unwrap();
        let direct_est = mc_cellular_direct(
            NormalizedDistance::new(1.0).unwrap(),
            alpha(4.0),
            1,
            1.0,
            &cfg(500_000, 34),
        )
        .unwrap();
        let joint = (relay_est.std_error.powi(2) + direct_est.std_error.powi(2)).sqrt();
        assert!((relay_est.p_hat - direct_est.p_hat).abs() < MC_SIGMA_FACTOR * joint);
    }

    #[test]
    fn cellular_relay_near_edge_beats_direct_at_quartic_loss() {
        let sc = CellScenario::new(1.0, 6, 1, alpha(4.0), 0.45, 1.0).unwrap();
        let ratio = PowerRatio::new(1.0).unwrap();
        let offset = std::f64::consts::PI / 6.0;
        let est =
            mc_cellular_relay(&sc, RelayStrategy::Rf, ratio, offset, &cfg(500_000, 35)).unwrap();
        assert!(est.p_hat < std::f64::consts::FRAC_PI_4);
    }

    #[test]
    fn estimate_invariants() {
        let est = mc_direct_outage(1.0, 1.0, alpha(2.0), &cfg(10_000, 2)).unwrap();
        assert!((est.std_error - (est.p_hat * (1.0 - est.p_hat) / 10_000.0).sqrt()).abs() < 1e-18);
        assert!(est.ci95_low <= est.p_hat && est.p_hat <= est.ci95_high);
        assert!(est.ci95_low >= 0.0 && est.ci95_high <= 1.0);
    }

    #[test]
    fn config_validation() {
        assert!(McConfig::new(0, 1).is_err());
        assert!(McConfig::with_chunk_size(10, 1, 11).is_err());
        assert!(McConfig::with_chunk_size(10, 1, 0).is_err());
    }
}
