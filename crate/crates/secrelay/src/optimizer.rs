//! Relay placement and DF power-ratio optimization.
//!
//! Neither the DF nor the RF outage is convex in the relay position, so every
//! search runs in two stages: a coarse global grid over the feasible region,
//! then derivative-free simplex descent from the best grid cell. Grid ties
//! break to the lexicographically lowest cell and the simplex is
//! deterministic, so results do not depend on evaluation order or thread
//! count.

use crate::cellular::{self, CellScenario};
use crate::closedform::{
    df_optimal_power_ratio, df_outage_optimal_raw, direct_outage, rf_outage_raw, LinkPowers,
    PowerRatio,
};
use crate::error::Error;
use crate::geometry::{Distances, PathLossExponent, Point2D};
use crate::tolerances;
use crate::RelayStrategy;
use crate::Result;

use std::f64::consts::PI;

/// Feasible set for a placement search: a planar box, or an interval for
/// one-dimensional searches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SearchRegion {
    Box2D {
        x_min: f64,
        x_max: f64,
        y_min: f64,
        y_max: f64,
    },
    Interval {
        min: f64,
        max: f64,
    },
}

impl SearchRegion {
    pub fn planar(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        if !(x_min < x_max && y_min < y_max)
            || ![x_min, x_max, y_min, y_max].iter().all(|v| v.is_finite())
        {
            return Err(Error::Domain {
                name: "search region",
                value: x_max - x_min,
                requirement: "min < max on every axis, all bounds finite",
            });
        }
        Ok(SearchRegion::Box2D {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    pub fn interval(min: f64, max: f64) -> Result<Self> {
        if !(min < max && min.is_finite() && max.is_finite()) {
            return Err(Error::Domain {
                name: "search interval",
                value: max - min,
                requirement: "min < max, bounds finite",
            });
        }
        Ok(SearchRegion::Interval { min, max })
    }

    /// Default relay search box for the unit four-node layouts.
    pub fn default_fournode() -> Self {
        SearchRegion::Box2D {
            x_min: -0.5,
            x_max: 1.5,
            y_min: -0.5,
            y_max: 1.5,
        }
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        match *self {
            SearchRegion::Box2D {
                x_min,
                x_max,
                y_min,
                y_max,
            } => (x_min..=x_max).contains(&x) && (y_min..=y_max).contains(&y),
            SearchRegion::Interval { .. } => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerConfig {
    /// Coarse grid resolution per active axis (>= 8).
    pub grid_points_per_axis: usize,
    /// Simplex iteration budget for the refinement stage.
    pub refine_iterations: usize,
    /// Convergence threshold on the simplex diameter.
    pub x_tolerance: f64,
    /// Convergence threshold on the simplex value spread.
    pub f_tolerance: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            grid_points_per_axis: 64,
            refine_iterations: 600,
            x_tolerance: 1e-6,
            f_tolerance: 1e-12,
        }
    }
}

impl OptimizerConfig {
    pub fn validated(self) -> Result<Self> {
        if self.grid_points_per_axis < 8 {
            return Err(Error::Domain {
                name: "grid_points_per_axis",
                value: self.grid_points_per_axis as f64,
                requirement: ">= 8",
            });
        }
        if !(self.x_tolerance > 0.0 && self.f_tolerance > 0.0) {
            return Err(Error::Domain {
                name: "tolerance",
                value: self.x_tolerance.min(self.f_tolerance),
                requirement: "> 0",
            });
        }
        Ok(self)
    }
}

/// Result of a four-node relay placement search.
#[derive(Debug, Clone, Copy)]
pub struct FourNodeResult {
    pub relay: Point2D,
    pub outage: f64,
    /// Optimal DF power ratio at the returned relay; absent for RF.
    pub power_ratio: Option<PowerRatio>,
    pub evaluations: u64,
    pub converged: bool,
    /// Grid nodes skipped because the relay coincided with a fixed node.
    pub skipped_grid_nodes: u64,
}

/// Result of a cellular bisector placement search.
#[derive(Debug, Clone, Copy)]
pub struct CellularResult {
    pub relay_distance: f64,
    /// `relay_distance / radius`.
    pub normalized_relay_distance: f64,
    /// Searched DF power ratio (capped); absent for RF.
    pub power_ratio: Option<PowerRatio>,
    pub outage: f64,
    pub evaluations: u64,
    pub converged: bool,
}

/// Transmission schemes appearing in sweep tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Direct,
    Df,
    Rf,
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Scheme::Direct => "direct",
            Scheme::Df => "df",
            Scheme::Rf => "rf",
        })
    }
}

/// One row of the eavesdropper-position sweep.
#[derive(Debug, Clone, Copy)]
pub struct EveSweepRow {
    pub eavesdropper: Point2D,
    /// Distance from the midpoint of the source-destination segment.
    pub eave_distance: f64,
    pub alpha: f64,
    pub scheme: Scheme,
    /// Optimal relay for DF/RF rows; absent for direct transmission.
    pub relay: Option<Point2D>,
    pub power_ratio: Option<f64>,
    pub outage: f64,
}

struct BestTracker {
    x: Vec<f64>,
    f: f64,
}

impl BestTracker {
    fn new(dim: usize) -> Self {
        Self {
            x: vec![0.0; dim],
            f: f64::INFINITY,
        }
    }

    fn offer(&mut self, x: &[f64], f: f64) {
        if f < self.f {
            self.f = f;
            self.x.copy_from_slice(x);
        }
    }
}

/// Nelder-Mead simplex descent (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2). Deterministic; infinite objective values are treated as
/// worse than any finite one. Returns true when both the value spread and
/// the simplex diameter fell under the configured tolerances.
fn nelder_mead<F>(
    f: &mut F,
    x0: &[f64],
    steps: &[f64],
    cfg: &OptimizerConfig,
    evals: &mut u64,
    best: &mut BestTracker,
) -> bool
where
    F: FnMut(&[f64]) -> f64,
{
    let n = x0.len();
    let mut eval = |x: &[f64], evals: &mut u64, best: &mut BestTracker| -> f64 {
        *evals += 1;
        let v = f(x);
        best.offer(x, v);
        v
    };

    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += steps[i];
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex
        .iter()
        .map(|x| eval(x, evals, best))
        .collect();

    for _ in 0..cfg.refine_iterations {
        // Order: best first. Stable sort keeps determinism on ties.
        let mut idx: Vec<usize> = (0..=n).collect();
        idx.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(std::cmp::Ordering::Equal));
        let ordered: Vec<Vec<f64>> = idx.iter().map(|&i| simplex[i].clone()).collect();
        let ordered_vals: Vec<f64> = idx.iter().map(|&i| values[i]).collect();
        simplex = ordered;
        values = ordered_vals;

        let spread = values[n] - values[0];
        let diameter = simplex[1..]
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&simplex[0])
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max)
            })
            .fold(0.0f64, f64::max);
        if spread.abs() <= cfg.f_tolerance && diameter <= cfg.x_tolerance {
            return true;
        }

        let centroid: Vec<f64> = (0..n)
            .map(|d| simplex[..n].iter().map(|v| v[d]).sum::<f64>() / n as f64)
            .collect();
        let worst = simplex[n].clone();
        let reflected: Vec<f64> = centroid
            .iter()
            .zip(&worst)
            .map(|(c, w)| c + (c - w))
            .collect();
        let f_r = eval(&reflected, evals, best);

        if f_r < values[0] {
            let expanded: Vec<f64> = centroid
                .iter()
                .zip(&worst)
                .map(|(c, w)| c + 2.0 * (c - w))
                .collect();
            let f_e = eval(&expanded, evals, best);
            if f_e < f_r {
                simplex[n] = expanded;
                values[n] = f_e;
            } else {
                simplex[n] = reflected;
                values[n] = f_r;
            }
        } else if f_r < values[n - 1] {
            simplex[n] = reflected;
            values[n] = f_r;
        } else {
            let (point, f_ref) = if f_r < values[n] {
                (reflected.clone(), f_r)
            } else {
                (worst.clone(), values[n])
            };
            let contracted: Vec<f64> = centroid
                .iter()
                .zip(&point)
                .map(|(c, p)| c + 0.5 * (p - c))
                .collect();
            let f_c = eval(&contracted, evals, best);
            if f_c < f_ref {
                simplex[n] = contracted;
                values[n] = f_c;
            } else {
                // Shrink toward the best vertex.
                for i in 1..=n {
                    let shrunk: Vec<f64> = simplex[0]
                        .iter()
                        .zip(&simplex[i])
                        .map(|(b, v)| b + 0.5 * (v - b))
                        .collect();
                    values[i] = eval(&shrunk, evals, best);
                    simplex[i] = shrunk;
                }
            }
        }
    }
    false
}

/// Coarse grid + simplex refinement of the closed-form four-node outage over
/// relay positions in `region`.
///
/// Grid nodes within `tolerances::NODE_EXCLUSION` of the source, destination,
/// or eavesdropper are singular and skipped (counted in the result); the
/// refinement treats them as infinitely bad.
pub fn optimize_relay_fournode(
    source: Point2D,
    destination: Point2D,
    eavesdropper: Point2D,
    alpha: PathLossExponent,
    strategy: RelayStrategy,
    region: &SearchRegion,
    cfg: &OptimizerConfig,
) -> Result<FourNodeResult> {
    let cfg = cfg.validated()?;
    if source.distance_to(&destination) == 0.0 {
        return Err(Error::Domain {
            name: "source-destination distance",
            value: 0.0,
            requirement: "> 0 (source must differ from destination)",
        });
    }
    let SearchRegion::Box2D {
        x_min,
        x_max,
        y_min,
        y_max,
    } = *region
    else {
        return Err(Error::Domain {
            name: "region",
            value: 0.0,
            requirement: "planar box for four-node placement",
        });
    };
    let mid_x = 0.5 * (source.x + destination.x);
    let mid_y = 0.5 * (source.y + destination.y);
    if !region.contains(mid_x, mid_y) {
        return Err(Error::Domain {
            name: "region",
            value: mid_x,
            requirement: "must contain the source-destination midpoint",
        });
    }

    let mut skipped = 0u64;
    let objective_at = |x: f64, y: f64, skipped: Option<&mut u64>| -> f64 {
        let relay = Point2D { x, y };
        let d = Distances {
            d_sr: source.distance_to(&relay),
            d_rd: relay.distance_to(&destination),
            d_se: source.distance_to(&eavesdropper),
            d_re: relay.distance_to(&eavesdropper),
            d_sd: source.distance_to(&destination),
        };
        if d.d_sr < tolerances::NODE_EXCLUSION
            || d.d_rd < tolerances::NODE_EXCLUSION
            || d.d_re < tolerances::NODE_EXCLUSION
        {
            if let Some(s) = skipped {
                *s += 1;
            }
            return f64::INFINITY;
        }
        let lp = LinkPowers::raw(&d, alpha);
        match strategy {
            RelayStrategy::Df => df_outage_optimal_raw(&lp),
            RelayStrategy::Rf => rf_outage_raw(&lp),
        }
    };

    let mut evals = 0u64;
    let mut best = BestTracker::new(2);
    let n = cfg.grid_points_per_axis;
    for ix in 0..n {
        let x = x_min + (x_max - x_min) * ix as f64 / (n - 1) as f64;
        for iy in 0..n {
            let y = y_min + (y_max - y_min) * iy as f64 / (n - 1) as f64;
            evals += 1;
            let v = objective_at(x, y, Some(&mut skipped));
            best.offer(&[x, y], v);
        }
    }

    let cell_x = (x_max - x_min) / (n - 1) as f64;
    let cell_y = (y_max - y_min) / (n - 1) as f64;
    let start = best.x.clone();
    let mut clamped_objective = |p: &[f64]| -> f64 {
        let x = p[0].clamp(x_min, x_max);
        let y = p[1].clamp(y_min, y_max);
        objective_at(x, y, None)
    };
    let converged = nelder_mead(
        &mut clamped_objective,
        &start,
        &[0.5 * cell_x, 0.5 * cell_y],
        &cfg,
        &mut evals,
        &mut best,
    );

    let relay = Point2D {
        x: best.x[0].clamp(x_min, x_max),
        y: best.x[1].clamp(y_min, y_max),
    };
    let power_ratio = match strategy {
        RelayStrategy::Df => {
            let d = Distances {
                d_sr: source.distance_to(&relay),
                d_rd: relay.distance_to(&destination),
                d_se: source.distance_to(&eavesdropper),
                d_re: relay.distance_to(&eavesdropper),
                d_sd: source.distance_to(&destination),
            };
            Some(df_optimal_power_ratio(&d, alpha)?)
        }
        RelayStrategy::Rf => None,
    };

    Ok(FourNodeResult {
        relay,
        outage: best.f,
        power_ratio,
        evaluations: evals,
        converged,
        skipped_grid_nodes: skipped,
    })
}

/// For each eavesdropper position and path-loss exponent, the optimal relay
/// and minimal outage per scheme. Direct rows need no relay and use the
/// source-destination and source-eavesdropper distances only.
pub fn sweep_eavesdropper_distance(
    source: Point2D,
    destination: Point2D,
    eave_path: &[Point2D],
    alpha_list: &[PathLossExponent],
    schemes: &[Scheme],
    region: &SearchRegion,
    cfg: &OptimizerConfig,
) -> Result<Vec<EveSweepRow>> {
    if eave_path.is_empty() {
        return Err(Error::Domain {
            name: "eave_path",
            value: 0.0,
            requirement: "non-empty",
        });
    }
    let mid = Point2D {
        x: 0.5 * (source.x + destination.x),
        y: 0.5 * (source.y + destination.y),
    };
    let mut rows = Vec::new();
    for &eve in eave_path {
        let eave_distance = mid.distance_to(&eve);
        for &alpha in alpha_list {
            for &scheme in schemes {
                let row = match scheme {
                    Scheme::Direct => {
                        let p = direct_outage(
                            source.distance_to(&destination),
                            source.distance_to(&eve),
                            alpha,
                        )?;
                        EveSweepRow {
                            eavesdropper: eve,
                            eave_distance,
                            alpha: alpha.value(),
                            scheme,
                            relay: None,
                            power_ratio: None,
                            outage: p.value(),
                        }
                    }
                    Scheme::Df | Scheme::Rf => {
                        let strategy = if scheme == Scheme::Df {
                            RelayStrategy::Df
                        } else {
                            RelayStrategy::Rf
                        };
                        let r = optimize_relay_fournode(
                            source, destination, eve, alpha, strategy, region, cfg,
                        )?;
                        EveSweepRow {
                            eavesdropper: eve,
                            eave_distance,
                            alpha: alpha.value(),
                            scheme,
                            relay: Some(r.relay),
                            power_ratio: r.power_ratio.map(|p| p.value()),
                            outage: r.outage,
                        }
                    }
                };
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// Optimal relay distance along the sector bisector for the point-A user,
/// minimizing the quadrature objective `cellular::relay_outage_at_a`.
///
/// RF searches the relay distance only. DF additionally searches the fixed
/// power ratio on (0, cap]; the ratio cannot adapt to the eavesdropper
/// position, so one global value is optimized jointly with the placement.
pub fn optimize_cellular_relay(
    scenario: &CellScenario,
    strategy: RelayStrategy,
    cfg: &OptimizerConfig,
) -> Result<CellularResult> {
    let cfg = cfg.validated()?;
    let radius = scenario.radius;
    let cap = scenario.power_ratio_cap;
    let ratio_floor = cap * 1e-3;
    let offset = PI / scenario.sectors as f64;
    let mut evals = 0u64;

    let objective = |d_br: f64, ratio: f64| -> f64 {
        let sc = CellScenario {
            relay_distance: d_br,
            ..*scenario
        };
        cellular::expected_edge_outage(&sc, strategy, ratio, offset)
    };

    let n = cfg.grid_points_per_axis;
    match strategy {
        RelayStrategy::Rf => {
            let mut best = BestTracker::new(1);
            for i in 0..n {
                let d = radius * i as f64 / (n - 1) as f64;
                evals += 1;
                best.offer(&[d], objective(d, 1.0));
            }
            let start = best.x.clone();
            let mut f = |p: &[f64]| objective(p[0].clamp(0.0, radius), 1.0);
            let converged = nelder_mead(
                &mut f,
                &start,
                &[0.5 * radius / (n - 1) as f64],
                &cfg,
                &mut evals,
                &mut best,
            );
            let d_br = best.x[0].clamp(0.0, radius);
            Ok(CellularResult {
                relay_distance: d_br,
                normalized_relay_distance: d_br / radius,
                power_ratio: None,
                outage: best.f,
                evaluations: evals,
                converged,
            })
        }
        RelayStrategy::Df => {
            let mut best = BestTracker::new(2);
            // Log-spaced ratio grid: the objective flattens near the cap and
            // blows up as the ratio vanishes.
            for i in 0..n {
                let d = radius * i as f64 / (n - 1) as f64;
                for j in 0..n {
                    let ratio = ratio_floor * (cap / ratio_floor).powf(j as f64 / (n - 1) as f64);
                    evals += 1;
                    best.offer(&[d, ratio], objective(d, ratio));
                }
            }
            let start = best.x.clone();
            let mut f = |p: &[f64]| {
                objective(p[0].clamp(0.0, radius), p[1].clamp(ratio_floor, cap))
            };
            let converged = nelder_mead(
                &mut f,
                &start,
                &[0.5 * radius / (n - 1) as f64, 0.05 * cap],
                &cfg,
                &mut evals,
                &mut best,
            );
            let d_br = best.x[0].clamp(0.0, radius);
            let ratio = best.x[1].clamp(ratio_floor, cap);
            Ok(CellularResult {
                relay_distance: d_br,
                normalized_relay_distance: d_br / radius,
                power_ratio: Some(PowerRatio::new(ratio)?),
                outage: best.f,
                evaluations: evals,
                converged,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{df_outage_optimal, rf_outage};
    use crate::geometry::PathLossExponent;

    fn alpha(a: f64) -> PathLossExponent {
        PathLossExponent::new(a).unwrap()
    }

    fn p(x: f64, y: f64) -> Point2D {
        Point2D { x, y }
    }

    fn reference_nodes() -> (Point2D, Point2D, Point2D) {
        (p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0))
    }

    #[test]
    fn reference_layout_df_optimum() {
        let (s, d, e) = reference_nodes();
        let r = optimize_relay_fournode(
            s,
            d,
            e,
            alpha(4.0),
            RelayStrategy::Df,
            &SearchRegion::default_fournode(),
            &OptimizerConfig::default(),
        )
        .unwrap();
        assert!((r.relay.x - 0.4551).abs() < 5e-3, "x {}", r.relay.x);
        assert!((r.relay.y + 0.0987).abs() < 5e-3, "y {}", r.relay.y);
        assert!((r.outage - 0.1645).abs() < 2e-3);
        assert!((r.outage - 0.16453053425307163).abs() < 1e-9);
        assert!(r.converged);
        // Optimal DF ratio at the optimum is close to 2.
        assert!((r.power_ratio.unwrap().value() - 2.0).abs() < 0.01);
    }

    #[test]
    fn reference_layout_rf_optimum() {
        let (s, d, e) = reference_nodes();
        let r = optimize_relay_fournode(
            s,
            d,
            e,
            alpha(4.0),
            RelayStrategy::Rf,
            &SearchRegion::default_fournode(),
            &OptimizerConfig::default(),
        )
        .unwrap();
        assert!((r.relay.x - 0.4551).abs() < 5e-3);
        assert!((r.relay.y + 0.0987).abs() < 5e-3);
        assert!((r.outage - 0.0878).abs() < 2e-3);
        assert!((r.outage - 0.08780335825122498).abs() < 1e-9);
        assert!(r.power_ratio.is_none());
    }

    #[test]
    fn far_eavesdropper_optimum_near_midpoint() {
        let (s, d, _) = reference_nodes();
        let r = optimize_relay_fournode(
            s,
            d,
            p(0.5, 100.0),
            alpha(4.0),
            RelayStrategy::Rf,
            &SearchRegion::default_fournode(),
            &OptimizerConfig::default(),
        )
        .unwrap();
        assert!((r.relay.x - 0.5).abs() < 0.02, "x {}", r.relay.x);
        assert!(r.relay.y.abs() < 0.02, "y {}", r.relay.y);
    }

    #[test]
    fn symmetric_instance_exact_midline() {
        // Eavesdropper on the perpendicular bisector: the RF argmin must sit
        // on x = 1/2 to within the position tolerance.
        let (s, d, _) = reference_nodes();
        let cfg = OptimizerConfig::default();
        let r = optimize_relay_fournode(
            s,
            d,
            p(0.5, 1.0),
            alpha(4.0),
            RelayStrategy::Rf,
            &SearchRegion::default_fournode(),
            &cfg,
        )
        .unwrap();
        assert!(
            (r.relay.x - 0.5).abs() <= cfg.x_tolerance * 10.0,
            "x {}",
            r.relay.x
        );
    }

    #[test]
    fn refinement_never_worse_than_grid_and_is_grid_stable() {
        let (s, d, e) = reference_nodes();
        let region = SearchRegion::default_fournode();
        let run = |grid: usize| {
            let cfg = OptimizerConfig {
                grid_points_per_axis: grid,
                ..OptimizerConfig::default()
            };
            optimize_relay_fournode(s, d, e, alpha(4.0), RelayStrategy::Rf, &region, &cfg).unwrap()
        };
        let coarse = run(32);
        let fine = run(64);
        // Best coarse-grid value recomputed directly:
        let mut grid_best = f64::INFINITY;
        for ix in 0..32 {
            let x = -0.5 + 2.0 * ix as f64 / 31.0;
            for iy in 0..32 {
                let y = -0.5 + 2.0 * iy as f64 / 31.0;
                let relay = p(x, y);
                let dsr = s.distance_to(&relay);
                let drd = relay.distance_to(&d);
                let dre = relay.distance_to(&e);
                if dsr.min(drd).min(dre) < tolerances::NODE_EXCLUSION {
                    continue;
                }
                let dist = Distances {
                    d_sr: dsr,
                    d_rd: drd,
                    d_se: 1.0,
                    d_re: dre,
                    d_sd: 1.0,
                };
                grid_best = grid_best.min(
                    rf_outage(&dist, alpha(4.0)).unwrap().value(),
                );
            }
        }
        assert!(coarse.outage <= grid_best + 1e-15);
        assert!((coarse.outage - fine.outage).abs() <= 1e-12);
    }

    #[test]
    fn first_order_condition_at_argmin() {
        let (s, d, e) = reference_nodes();
        let r = optimize_relay_fournode(
            s,
            d,
            e,
            alpha(4.0),
            RelayStrategy::Rf,
            &SearchRegion::default_fournode(),
            &OptimizerConfig::default(),
        )
        .unwrap();
        let f = |x: f64, y: f64| {
            let relay = p(x, y);
            let dist = Distances {
                d_sr: s.distance_to(&relay),
                d_rd: relay.distance_to(&d),
                d_se: 1.0,
                d_re: relay.distance_to(&e),
                d_sd: 1.0,
            };
            rf_outage(&dist, alpha(4.0)).unwrap().value()
        };
        let h = 1e-5;
        let gx = (f(r.relay.x + h, r.relay.y) - f(r.relay.x - h, r.relay.y)) / (2.0 * h);
        let gy = (f(r.relay.x, r.relay.y + h) - f(r.relay.x, r.relay.y - h)) / (2.0 * h);
        assert!(gx.hypot(gy) <= 1e-4, "gradient {} {}", gx, gy);
    }

    #[test]
    fn fmin_matches_objective_at_argmin() {
        let (s, d, e) = reference_nodes();
        let cfg = OptimizerConfig::default();
        let r = optimize_relay_fournode(
            s,
            d,
            e,
            alpha(3.0),
            RelayStrategy::Df,
            &SearchRegion::default_fournode(),
            &cfg,
        )
        .unwrap();
        let dist = Distances {
            d_sr: s.distance_to(&r.relay),
            d_rd: r.relay.distance_to(&d),
            d_se: 1.0,
            d_re: r.relay.distance_to(&e),
            d_sd: 1.0,
        };
        let direct_eval = df_outage_optimal(&dist, alpha(3.0)).unwrap().value();
        assert!((direct_eval - r.outage).abs() <= cfg.f_tolerance.max(1e-14));
    }

    #[test]
    fn grid_skips_singular_nodes() {
        // Eavesdropper placed exactly on a default grid node.
        let (s, d, _) = reference_nodes();
        let r = optimize_relay_fournode(
            s,
            d,
            p(0.5, 0.5),
            alpha(2.0),
            RelayStrategy::Rf,
            &SearchRegion::planar(0.0, 1.0, 0.0, 1.0).unwrap(),
            &OptimizerConfig {
                grid_points_per_axis: 11,
                ..OptimizerConfig::default()
            },
        )
        .unwrap();
        // Grid nodes land on S, D, and E once each.
        assert!(r.skipped_grid_nodes >= 3);
        assert!(r.outage.is_finite());
    }

    #[test]
    fn rejects_bad_inputs() {
        let (s, d, e) = reference_nodes();
        assert!(optimize_relay_fournode(
            s,
            s,
            e,
            alpha(2.0),
            RelayStrategy::Rf,
            &SearchRegion::default_fournode(),
            &OptimizerConfig::default(),
        )
        .is_err());
        // Region missing the midpoint.
        assert!(optimize_relay_fournode(
            s,
            d,
            e,
            alpha(2.0),
            RelayStrategy::Rf,
            &SearchRegion::planar(2.0, 3.0, 2.0, 3.0).unwrap(),
            &OptimizerConfig::default(),
        )
        .is_err());
        assert!(SearchRegion::planar(1.0, 1.0, 0.0, 1.0).is_err());
        assert!(optimize_relay_fournode(
            s,
            d,
            e,
            alpha(2.0),
            RelayStrategy::Rf,
            &SearchRegion::interval(0.0, 1.0).unwrap(),
            &OptimizerConfig::default(),
        )
        .is_err());
    }

    #[test]
    fn sweep_far_eavesdropper_ratios() {
        let (s, d, _) = reference_nodes();
        let path = [p(0.5, 50.0)];
        let rows = sweep_eavesdropper_distance(
            s,
            d,
            &path,
            &[alpha(2.0), alpha(4.0)],
            &[Scheme::Direct, Scheme::Df, Scheme::Rf],
            &SearchRegion::default_fournode(),
            &OptimizerConfig::default(),
        )
        .unwrap();
        let get = |a: f64, sch: Scheme| {
            rows.iter()
                .find(|r| r.alpha == a && r.scheme == sch)
                .unwrap()
                .outage
        };
        // DF brings no benefit at alpha = 2.
        let df2 = get(2.0, Scheme::Df);
        let direct2 = get(2.0, Scheme::Direct);
        assert!((df2 / direct2 - 1.0).abs() < 0.1, "{df2} vs {direct2}");
        // RF is about half of DF at alpha = 4.
        let rf4 = get(4.0, Scheme::Rf);
        let df4 = get(4.0, Scheme::Df);
        assert!((rf4 / df4 - 0.5).abs() < 0.05);
        // RF beats DF on every row.
        for a in [2.0, 4.0] {
            assert!(get(a, Scheme::Rf) < get(a, Scheme::Df));
        }
    }
}
