//! Cellular downlink scenario: a circular cell of radius R with the base
//! station at the center, mobile users anywhere in the cell, and
//! non-cooperative eavesdroppers uniformly distributed over the cell disk.
//!
//! The eavesdropper distance from the center then has density `2t/R^2` on
//! [0, R], which drives both the closed forms and the quadrature objectives
//! here. Sector relays sit on sector bisectors; the worst-served user is at
//! "point A", the intersection of the cell edge and a sector edge, an angle
//! pi/M away from its serving relay's bisector.

use crate::closedform::{
    df_outage_general_raw, rf_outage_raw, LinkPowers, OutageProbability, PowerRatio,
};
use crate::error::Error;
use crate::geometry::{Distances, PathLossExponent, Point2D};
use crate::montecarlo::{mc_cellular_direct, McConfig, McEstimate};
use crate::quad;
use crate::tolerances;
use crate::RelayStrategy;
use crate::Result;

use std::f64::consts::PI;

/// A single-cell deployment with sector relays.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellScenario {
    /// Cell radius R (the normalizing length).
    pub radius: f64,
    /// Number of sectors M (one relay per sector).
    pub sectors: u32,
    /// Number of non-cooperative eavesdroppers N.
    pub eavesdroppers: u32,
    pub alpha: PathLossExponent,
    /// Relay distance from the base station along the sector bisector,
    /// in [0, radius].
    pub relay_distance: f64,
    /// Upper bound on the DF relay-to-source power ratio.
    pub power_ratio_cap: f64,
}

impl CellScenario {
    pub fn new(
        radius: f64,
        sectors: u32,
        eavesdroppers: u32,
        alpha: PathLossExponent,
        relay_distance: f64,
        power_ratio_cap: f64,
    ) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::Domain {
                name: "radius",
                value: radius,
                requirement: "> 0 and finite",
            });
        }
        if sectors < 1 {
            return Err(Error::Domain {
                name: "sectors",
                value: sectors as f64,
                requirement: ">= 1",
            });
        }
        if eavesdroppers < 1 {
            return Err(Error::Domain {
                name: "eavesdroppers",
                value: eavesdroppers as f64,
                requirement: ">= 1",
            });
        }
        if !(relay_distance.is_finite() && (0.0..=radius).contains(&relay_distance)) {
            return Err(Error::Domain {
                name: "relay_distance",
                value: relay_distance,
                requirement: "in [0, radius]",
            });
        }
        if !(power_ratio_cap.is_finite() && power_ratio_cap > 0.0) {
            return Err(Error::Domain {
                name: "power_ratio_cap",
                value: power_ratio_cap,
                requirement: "> 0 and finite",
            });
        }
        Ok(Self {
            radius,
            sectors,
            eavesdroppers,
            alpha,
            relay_distance,
            power_ratio_cap,
        })
    }

    /// Serving relay position, with the bisector along the +x axis.
    pub fn relay_position(&self) -> Point2D {
        Point2D {
            x: self.relay_distance,
            y: 0.0,
        }
    }

    /// Cell-edge user at angular offset `angle` from the relay bisector.
    pub fn edge_user_position(&self, angle: f64) -> Point2D {
        Point2D {
            x: self.radius * angle.cos(),
            y: self.radius * angle.sin(),
        }
    }

    /// Worst-case user: cell edge at the sector edge, pi/M off the bisector.
    pub fn point_a(&self) -> Point2D {
        self.edge_user_position(PI / self.sectors as f64)
    }
}

/// Base-station-to-user distance normalized by the cell radius, in (0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct NormalizedDistance(f64);

impl NormalizedDistance {
    pub fn new(x: f64) -> Result<Self> {
        if !(x.is_finite() && x > 0.0 && x <= 1.0) {
            return Err(Error::Domain {
                name: "normalized distance",
                value: x,
                requirement: "in (0, 1]",
            });
        }
        Ok(Self(x))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Direct-transmission outage against a single eavesdropper uniform on the
/// cell disk:
///
/// `P1(x) = int_0^1 [x^a / (x^a + t^a)] 2t dt`, `x = d_sd / R`.
///
/// Closed forms for alpha in {2, 3, 4}:
/// * a=2: `x^2 ln(1 + 1/x^2)`
/// * a=3: `2x^2 [ (1/6) ln((x^2-x+1)/(x+1)^2) + (1/sqrt3)(atan((2-x)/(sqrt3 x)) + pi/6) ]`
/// * a=4: `x^2 atan(1/x^2)`
///
/// Other exponents fall back to adaptive quadrature (absolute error below
/// `tolerances::CELL_DIRECT_QUAD_ABS`).
pub fn direct_outage_single_eve(
    x: NormalizedDistance,
    alpha: PathLossExponent,
) -> OutageProbability {
    let x = x.value();
    let a = alpha.value();
    let p = if a == 2.0 {
        let x2 = x * x;
        x2 * (1.0 + 1.0 / x2).ln()
    } else if a == 3.0 {
        let x2 = x * x;
        2.0 * x2
            * ((x2 - x + 1.0).ln() - 2.0 * (x + 1.0).ln()) / 6.0
            + 2.0 * x2 / 3f64.sqrt() * (((2.0 - x) / (3f64.sqrt() * x)).atan() + PI / 6.0)
    } else if a == 4.0 {
        let x2 = x * x;
        x2 * (1.0 / x2).atan()
    } else {
        let xa = x.powf(a);
        let r = quad::adaptive(
            &mut |t: f64| xa / (xa + t.powf(a)) * 2.0 * t,
            0.0,
            1.0,
            tolerances::CELL_DIRECT_QUAD_ABS,
            48,
        );
        r.value
    };
    OutageProbability::new(p.clamp(0.0, 1.0)).expect("single-eve outage in [0,1]")
}

/// Sandwich bounds for N non-cooperative eavesdroppers:
/// `P1 <= P^N <= 1 - (1 - P1)^N`.
pub fn direct_outage_bounds(
    x: NormalizedDistance,
    alpha: PathLossExponent,
    n_eves: u32,
) -> Result<(OutageProbability, OutageProbability)> {
    if n_eves < 1 {
        return Err(Error::Domain {
            name: "n_eves",
            value: n_eves as f64,
            requirement: ">= 1",
        });
    }
    let p1 = direct_outage_single_eve(x, alpha);
    let upper = 1.0 - (1.0 - p1.value()).powi(n_eves as i32);
    Ok((p1, OutageProbability::new(upper.clamp(0.0, 1.0))?))
}

/// Exact cell-edge outage constants `P1(1)` for alpha in {2, 3, 4}:
/// ln 2, 2pi/(3 sqrt 3) - (2/3) ln 2, and pi/4.
pub fn cell_edge_constant(alpha: PathLossExponent) -> Result<OutageProbability> {
    let p = if alpha.value() == 2.0 {
        std::f64::consts::LN_2
    } else if alpha.value() == 3.0 {
        2.0 * PI / (3.0 * 3f64.sqrt()) - 2.0 / 3.0 * std::f64::consts::LN_2
    } else if alpha.value() == 4.0 {
        std::f64::consts::FRAC_PI_4
    } else {
        return Err(Error::UnsupportedAlpha {
            alpha: alpha.value(),
        });
    };
    OutageProbability::new(p)
}

/// Diagnostic evaluation of the alternating cell-edge series
/// `sum_k (-1)^k / (1 + k a/2)` by averaged partial sums.
///
/// The series form of `P1(x)` has terms `(1/x^2)^(1 + k a/2)` that grow
/// without bound for x < 1, so it is usable only at the cell edge (x = 1),
/// where it converges slowly; averaging consecutive partial sums makes it
/// practical. Quadrature and the closed forms remain authoritative.
pub fn cell_edge_series_diagnostic(alpha: PathLossExponent, terms: u32) -> f64 {
    let a = alpha.value();
    let mut partial = 0.0;
    let mut prev = 0.0;
    for k in 0..terms.max(2) {
        prev = partial;
        let term = 1.0 / (1.0 + k as f64 * a / 2.0);
        partial += if k % 2 == 0 { term } else { -term };
    }
    0.5 * (partial + prev)
}

/// Expected outage of the point-A user for a relay at
/// `scenario.relay_distance` on the bisector, averaged over a single
/// eavesdropper uniform on the cell disk (the analytic sector objective;
/// N is treated as 1 here regardless of `scenario.eavesdroppers`).
///
/// RF uses the per-hop product form and is independent of `power_ratio`;
/// DF fixes `power_ratio` globally, since the eavesdropper position is
/// unknown to the transmitters and the allocation cannot adapt to it.
///
/// Evaluated by iterated adaptive quadrature in polar coordinates with the
/// radial density `2t/R^2`; absolute error below
/// `tolerances::CELL_RELAY_QUAD_ABS`.
pub fn relay_outage_at_a(
    scenario: &CellScenario,
    strategy: RelayStrategy,
    power_ratio: PowerRatio,
) -> Result<OutageProbability> {
    if strategy == RelayStrategy::Df && power_ratio.value() > scenario.power_ratio_cap {
        return Err(Error::RatioAboveCap {
            ratio: power_ratio.value(),
            cap: scenario.power_ratio_cap,
        });
    }
    let value = expected_edge_outage(scenario, strategy, power_ratio.value(), PI / scenario.sectors as f64);
    OutageProbability::new(value.clamp(0.0, 1.0))
}

/// The quadrature core behind [`relay_outage_at_a`], for an edge user at an
/// arbitrary angular offset from the relay bisector.
pub(crate) fn expected_edge_outage(
    scenario: &CellScenario,
    strategy: RelayStrategy,
    ratio: f64,
    mu_angle_offset: f64,
) -> f64 {
    let radius = scenario.radius;
    let relay = scenario.relay_position();
    let user = scenario.edge_user_position(mu_angle_offset);
    let d_sr = scenario.relay_distance;
    let d_rd = relay.distance_to(&user);
    let alpha = scenario.alpha;

    // Budget split: inner (angular) tolerance integrates against a unit-mass
    // radial density, outer gets the rest.
    let inner_tol = 0.3 * tolerances::CELL_RELAY_QUAD_ABS;
    let outer_tol = 0.5 * tolerances::CELL_RELAY_QUAD_ABS;

    let mut outer = |t: f64| {
        let mut integrand = |theta: f64| {
            let eve = Point2D {
                x: t * theta.cos(),
                y: t * theta.sin(),
            };
            let d = Distances {
                d_sr,
                d_rd,
                d_se: t,
                d_re: relay.distance_to(&eve),
                d_sd: radius,
            };
            let lp = LinkPowers::raw(&d, alpha);
            match strategy {
                RelayStrategy::Df => df_outage_general_raw(&lp, ratio),
                RelayStrategy::Rf => rf_outage_raw(&lp),
            }
        };
        let mean =
            quad::adaptive(&mut integrand, 0.0, 2.0 * PI, inner_tol * 2.0 * PI, 32).value
                / (2.0 * PI);
        mean * 2.0 * t / (radius * radius)
    };
    quad::adaptive(&mut outer, 0.0, radius, outer_tol, 32).value
}

/// How a sweep row's value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMethod {
    Analytic,
    MonteCarlo,
}

impl std::fmt::Display for SweepMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SweepMethod::Analytic => "analytic",
            SweepMethod::MonteCarlo => "mc",
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DirectSweepRow {
    pub x: f64,
    pub alpha: f64,
    pub n_eves: u32,
    pub value: f64,
    pub method: SweepMethod,
    pub upper_bound: f64,
    /// Monte Carlo standard error; zero for analytic rows.
    pub std_error: f64,
}

/// Direct-transmission outage versus normalized distance: one row per
/// `(x, alpha, N)`. Single-eavesdropper rows are analytic; multi-eavesdropper
/// outage has no closed form and is estimated by Monte Carlo.
pub fn sweep_direct_outage(
    x_grid: &[f64],
    alpha_list: &[PathLossExponent],
    n_list: &[u32],
    cfg: &McConfig,
) -> Result<Vec<DirectSweepRow>> {
    if x_grid.is_empty() || alpha_list.is_empty() || n_list.is_empty() {
        return Err(Error::Domain {
            name: "sweep grid",
            value: 0.0,
            requirement: "non-empty x, alpha, and N lists",
        });
    }
    let mut rows = Vec::with_capacity(x_grid.len() * alpha_list.len() * n_list.len());
    for &x in x_grid {
        let xn = NormalizedDistance::new(x)?;
        for &alpha in alpha_list {
            for &n in n_list {
                let (_, upper) = direct_outage_bounds(xn, alpha, n)?;
                let row = if n == 1 {
                    DirectSweepRow {
                        x,
                        alpha: alpha.value(),
                        n_eves: n,
                        value: direct_outage_single_eve(xn, alpha).value(),
                        method: SweepMethod::Analytic,
                        upper_bound: upper.value(),
                        std_error: 0.0,
                    }
                } else {
                    let est: McEstimate = mc_cellular_direct(xn, alpha, n, 1.0, cfg)?;
                    DirectSweepRow {
                        x,
                        alpha: alpha.value(),
                        n_eves: n,
                        value: est.p_hat,
                        method: SweepMethod::MonteCarlo,
                        upper_bound: upper.value(),
                        std_error: est.std_error,
                    }
                };
                rows.push(row);
            }
        }
    }
    Ok(rows)
}
