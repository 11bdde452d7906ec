//! Exact secrecy-outage probabilities for the four-node system.
//!
//! With unit-exponential squared channel magnitudes and path loss `d^-alpha`,
//! the received powers are exponential with means `p/d^alpha`, and every
//! outage probability below is a ratio of polynomials in the link-distance
//! powers `d_ij^alpha`.
//!
//! Near-certain outage (tiny secure-connection probability) is the
//! numerically delicate regime: `1 - q` destroys the information in a tiny
//! `q`. Outage numerators are therefore expanded so that no cancelling
//! subtraction occurs, and the secure-connection complements are exposed
//! directly for callers that compare probabilities close to one.

use crate::dd::Dd;
use crate::error::Error;
use crate::geometry::{Distances, PathLossExponent};
use crate::Result;

/// A probability of secrecy outage, guaranteed in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct OutageProbability(f64);

impl OutageProbability {
    pub fn new(value: f64) -> Result<Self> {
        if !(value.is_finite() && (0.0..=1.0).contains(&value)) {
            return Err(Error::Domain {
                name: "outage probability",
                value,
                requirement: "in [0, 1]",
            });
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    fn from_ratio_of_sums(num: f64, den: f64) -> Self {
        debug_assert!(num >= 0.0 && den >= num);
        Self((num / den).clamp(0.0, 1.0))
    }
}

/// Relay-to-source transmit power ratio `p_r / p_s`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PowerRatio(f64);

impl PowerRatio {
    pub fn new(ratio: f64) -> Result<Self> {
        if !(ratio.is_finite() && ratio > 0.0) {
            return Err(Error::Domain {
                name: "power ratio",
                value: ratio,
                requirement: "> 0 and finite",
            });
        }
        Ok(Self(ratio))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// The four link-distance powers `d_ij^alpha` every formula consumes.
///
/// `sr`/`rd` are the legitimate hops, `se`/`re` the eavesdropper links.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LinkPowers {
    pub sr: f64,
    pub rd: f64,
    pub se: f64,
    pub re: f64,
}

impl LinkPowers {
    /// Validates strictly positive link distances and raises them to alpha.
    fn checked(dist: &Distances, alpha: PathLossExponent) -> Result<Self> {
        for (link, d) in [
            ("source-relay", dist.d_sr),
            ("relay-destination", dist.d_rd),
            ("source-eavesdropper", dist.d_se),
            ("relay-eavesdropper", dist.d_re),
        ] {
            if d == 0.0 {
                return Err(Error::DegenerateLink { link });
            }
        }
        Ok(Self::raw(dist, alpha))
    }

    /// No positivity check; zero legs flow into the documented limit
    /// expressions of the raw evaluators below (used by the cellular
    /// integrands, where `d_sr -> 0` / `d_rd -> 0` are meaningful limits).
    pub(crate) fn raw(dist: &Distances, alpha: PathLossExponent) -> Self {
        Self {
            sr: alpha.pow(dist.d_sr),
            rd: alpha.pow(dist.d_rd),
            se: alpha.pow(dist.d_se),
            re: alpha.pow(dist.d_re),
        }
    }
}

/// DF outage at an explicit power ratio, numerator expanded so no
/// subtraction cancels:
///
/// `P = N / (N + se*re)` with
/// `N = 2*sr*rd + sr*re + se*rd + t*sr*(sr+se) + (1/t)*rd*(rd+re)`,
///
/// which equals `1 - se*re / [(rd+re)(sr+se) + sr*rd + t*sr*(sr+se)
/// + (1/t)*rd*(rd+re)]` for `t = p_r/p_s`.
pub(crate) fn df_outage_general_raw(lp: &LinkPowers, ratio: f64) -> f64 {
    let num = 2.0 * lp.sr * lp.rd
        + lp.sr * lp.re
        + lp.se * lp.rd
        + ratio * lp.sr * (lp.sr + lp.se)
        + (lp.rd * (lp.rd + lp.re)) / ratio;
    (num / (num + lp.se * lp.re)).clamp(0.0, 1.0)
}

/// DF outage at the optimal power ratio:
/// `P = N / (N + se*re)`,
/// `N = 2*sr*rd + sr*re + se*rd + 2*sqrt((sr+se)(rd+re)*sr*rd)`,
/// equal to `1 - se*re / (sqrt((sr+se)(rd+re)) + sqrt(sr*rd))^2`.
pub(crate) fn df_outage_optimal_raw(lp: &LinkPowers) -> f64 {
    let cross = ((lp.sr + lp.se) * (lp.rd + lp.re) * lp.sr * lp.rd).sqrt();
    let num = 2.0 * lp.sr * lp.rd + lp.sr * lp.re + lp.se * lp.rd + 2.0 * cross;
    (num / (num + lp.se * lp.re)).clamp(0.0, 1.0)
}

pub(crate) fn df_secure_optimal_raw(lp: &LinkPowers) -> f64 {
    let cross = ((lp.sr + lp.se) * (lp.rd + lp.re) * lp.sr * lp.rd).sqrt();
    let num = 2.0 * lp.sr * lp.rd + lp.sr * lp.re + lp.se * lp.rd + 2.0 * cross;
    (lp.se * lp.re) / (num + lp.se * lp.re)
}

/// Per-hop secure probability `eve / (leg + eve)`; a zero-length hop is
/// almost surely secure (infinite mean gain), so `leg == 0` yields 1.
#[inline]
pub(crate) fn hop_secure_raw(leg: f64, eve: f64) -> f64 {
    if leg == 0.0 {
        1.0
    } else {
        eve / (leg + eve)
    }
}

/// RF outage `1 - [se/(sr+se)][re/(rd+re)]` expanded to
/// `(sr*rd + sr*re + se*rd) / ((sr+se)(rd+re))`.
pub(crate) fn rf_outage_raw(lp: &LinkPowers) -> f64 {
    if lp.sr == 0.0 || lp.rd == 0.0 {
        return 1.0 - hop_secure_raw(lp.sr, lp.se) * hop_secure_raw(lp.rd, lp.re);
    }
    // The numerator and denominator round independently; clamp the ulp spill.
    ((lp.sr * lp.rd + lp.sr * lp.re + lp.se * lp.rd) / ((lp.sr + lp.se) * (lp.rd + lp.re)))
        .clamp(0.0, 1.0)
}

pub(crate) fn rf_secure_raw(lp: &LinkPowers) -> f64 {
    (lp.se * lp.re) / ((lp.sr + lp.se) * (lp.rd + lp.re))
}

/// Secrecy outage of decode-and-forward at an arbitrary power ratio.
pub fn df_outage_general(
    dist: &Distances,
    alpha: PathLossExponent,
    ratio: PowerRatio,
) -> Result<OutageProbability> {
    let lp = LinkPowers::checked(dist, alpha)?;
    let p = df_outage_general_raw(&lp, ratio.value());
    Ok(OutageProbability::from_ratio_of_sums(p, 1.0))
}

/// The power ratio `p_r/p_s` minimizing the DF outage:
/// `sqrt( rd*(rd+re) / (sr*(sr+se)) )` in link-distance powers.
pub fn df_optimal_power_ratio(dist: &Distances, alpha: PathLossExponent) -> Result<PowerRatio> {
    let lp = LinkPowers::checked(dist, alpha)?;
    PowerRatio::new(((lp.rd * (lp.rd + lp.re)) / (lp.sr * (lp.sr + lp.se))).sqrt())
}

/// Minimal DF outage, i.e. [`df_outage_general`] at [`df_optimal_power_ratio`].
pub fn df_outage_optimal(dist: &Distances, alpha: PathLossExponent) -> Result<OutageProbability> {
    let lp = LinkPowers::checked(dist, alpha)?;
    OutageProbability::new(df_outage_optimal_raw(&lp))
}

/// Secure-connection probability of optimal-power DF (complement of
/// [`df_outage_optimal`], computed without the final subtraction).
pub fn df_secure_optimal(dist: &Distances, alpha: PathLossExponent) -> Result<f64> {
    let lp = LinkPowers::checked(dist, alpha)?;
    Ok(df_secure_optimal_raw(&lp))
}

/// Secrecy outage of randomize-and-forward. Independent of transmit powers.
pub fn rf_outage(dist: &Distances, alpha: PathLossExponent) -> Result<OutageProbability> {
    let lp = LinkPowers::checked(dist, alpha)?;
    OutageProbability::new(rf_outage_raw(&lp))
}

/// Secure-connection probability of RF (complement of [`rf_outage`]).
pub fn rf_secure(dist: &Distances, alpha: PathLossExponent) -> Result<f64> {
    let lp = LinkPowers::checked(dist, alpha)?;
    Ok(rf_secure_raw(&lp))
}

/// Single-hop baseline `d_sd^alpha / (d_sd^alpha + d_se^alpha)`.
pub fn direct_outage(d_sd: f64, d_se: f64, alpha: PathLossExponent) -> Result<OutageProbability> {
    if d_sd <= 0.0 {
        return Err(Error::DegenerateLink {
            link: "source-destination",
        });
    }
    if d_se <= 0.0 {
        return Err(Error::DegenerateLink {
            link: "source-eavesdropper",
        });
    }
    let sd = alpha.pow(d_sd);
    let se = alpha.pow(d_se);
    Ok(OutageProbability::from_ratio_of_sums(sd, sd + se))
}

/// Residual of the DF/RF secrecy identity
///
/// `sqrt(1/(1-P_DF)) - sqrt(1/(1-P_RF)) - sqrt(sr*rd/(se*re))`,
///
/// which is algebraically zero. Both square-root terms reduce to
/// `(sqrt((sr+se)(rd+re)) + sqrt(sr*rd)) / sqrt(se*re)` minus its expansion,
/// and can exceed 1e8 for near-certain-outage geometries, so the residual is
/// evaluated in double-double arithmetic; the returned value reflects
/// algebraic error, not f64 rounding of large terms.
pub fn df_rf_identity_residual(dist: &Distances, alpha: PathLossExponent) -> Result<f64> {
    let lp = LinkPowers::checked(dist, alpha)?;
    let sr = Dd::from_f64(lp.sr);
    let rd = Dd::from_f64(lp.rd);
    let se = Dd::from_f64(lp.se);
    let re = Dd::from_f64(lp.re);

    let a1 = sr.add(se);
    let b1 = rd.add(re);
    let root_cross = a1.mul(b1).sqrt();
    let root_hops = sr.mul(rd).sqrt();
    let root_eves = se.mul(re).sqrt();

    // lhs = sqrt(1/(1-P_DF)), rhs terms = sqrt(1/(1-P_RF)) and sqrt(sr*rd/(se*re))
    let lhs = root_cross.add(root_hops).div(root_eves);
    let rhs = root_cross.div(root_eves).add(root_hops.div(root_eves));
    Ok(lhs.sub(rhs).to_f64())
}

/// Far-eavesdropper approximations, valid when the eavesdropper is much
/// farther than the legitimate nodes' spread (`d_se >> d_sd`, with
/// `d_re ~ d_se`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticOutages {
    /// `(sqrt(d_sr^a/d_se^a) + sqrt(d_rd^a/d_se^a))^2`
    pub df: f64,
    /// `(d_sr^a + d_rd^a) / d_se^a`
    pub rf: f64,
    /// `d_sd^a / d_se^a`
    pub direct: f64,
}

pub fn asymptotic_outages(
    d_sr: f64,
    d_rd: f64,
    d_sd: f64,
    d_se: f64,
    alpha: PathLossExponent,
) -> Result<AsymptoticOutages> {
    if d_se <= 0.0 {
        return Err(Error::Domain {
            name: "d_se",
            value: d_se,
            requirement: "> 0",
        });
    }
    let se = alpha.pow(d_se);
    let s = alpha.pow(d_sr);
    let r = alpha.pow(d_rd);
    let root = (s / se).sqrt() + (r / se).sqrt();
    Ok(AsymptoticOutages {
        df: root * root,
        rf: (s + r) / se,
        direct: alpha.pow(d_sd) / se,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{distances_from_layout, FourNodeLayout, Point2D};
    use crate::tolerances;

    fn alpha(a: f64) -> PathLossExponent {
        PathLossExponent::new(a).unwrap()
    }

    fn dist(d_sr: f64, d_rd: f64, d_se: f64, d_re: f64) -> Distances {
        Distances::new(d_sr, d_rd, d_se, d_re, 1.0).unwrap()
    }

    /// Relay at the reported optimum of the reference layout
    /// S(0,0), D(1,0), E(0,1).
    fn reference_optimum_distances() -> Distances {
        let p = |x, y| Point2D::new(x, y).unwrap();
        let layout = FourNodeLayout::new(
            p(0.0, 0.0),
            p(0.4551, -0.0987),
            p(1.0, 0.0),
            p(0.0, 1.0),
        );
        distances_from_layout(&layout)
    }

    #[test]
    fn df_general_unit_geometry() {
        let p = df_outage_general(
            &dist(1.0, 1.0, 1.0, 1.0),
            alpha(2.0),
            PowerRatio::new(1.0).unwrap(),
        )
        .unwrap();
        // 1 - 1/(4 + 1 + 2 + 2)
        assert_eq!(p.value(), 8.0 / 9.0);
    }

    #[test]
    fn df_general_relabel_symmetry() {
        // Swapping (sr<->rd, se<->re) together with ratio -> 1/ratio leaves
        // the expression unchanged.
        let a = alpha(3.0);
        let r = PowerRatio::new(2.7).unwrap();
        let r_inv = PowerRatio::new(1.0 / 2.7).unwrap();
        let p1 = df_outage_general(&dist(0.6, 1.4, 2.3, 0.8), a, r).unwrap();
        let p2 = df_outage_general(&dist(1.4, 0.6, 0.8, 2.3), a, r_inv).unwrap();
        assert!((p1.value() - p2.value()).abs() < 1e-15);
    }

    #[test]
    fn df_general_at_reference_optimum() {
        let d = reference_optimum_distances();
        let p = df_outage_general(&d, alpha(4.0), PowerRatio::new(2.0).unwrap()).unwrap();
        // Independently computed from the expanded expression.
        assert!((p.value() - 0.1645305349638777).abs() < 1e-12);
        let opt = df_outage_optimal(&d, alpha(4.0)).unwrap();
        assert!((p.value() - opt.value()).abs() < 1e-3);
    }

    #[test]
    fn optimal_ratio_symmetric_and_reference() {
        let a = alpha(3.0);
        let r = df_optimal_power_ratio(&dist(0.8, 0.8, 1.3, 1.3), a).unwrap();
        assert!((r.value() - 1.0).abs() < 1e-15);

        let r_unit = df_optimal_power_ratio(&dist(1.0, 1.0, 1.0, 1.0), alpha(2.7)).unwrap();
        assert_eq!(r_unit.value(), 1.0);

        let d = reference_optimum_distances();
        let r_ref = df_optimal_power_ratio(&d, alpha(4.0)).unwrap();
        assert!((r_ref.value() - 1.999886526465498).abs() < 1e-9);
        assert!((r_ref.value() - 2.0).abs() < 2e-4);
    }

    #[test]
    fn df_optimal_matches_reported_value() {
        let d = reference_optimum_distances();
        let p = df_outage_optimal(&d, alpha(4.0)).unwrap();
        assert!((p.value() - 0.1645).abs() < 1e-4);
        assert!((p.value() - 0.1645305348532483).abs() < 1e-12);
    }

    #[test]
    fn df_optimal_symmetric_links() {
        let p = df_outage_optimal(&dist(0.7, 1.2, 0.7, 1.2), alpha(3.3)).unwrap();
        assert!((p.value() - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn df_optimal_beats_ratio_grid() {
        // 1-D grid-minimization oracle for the analytic optimum.
        let d = dist(0.45, 1.7, 2.2, 0.9);
        let a = alpha(3.0);
        let opt = df_outage_optimal(&d, a).unwrap().value();
        let mut grid_min = f64::INFINITY;
        for i in 0..=3000 {
            let t = 10f64.powf(-3.0 + 6.0 * i as f64 / 3000.0);
            let p = df_outage_general(&d, a, PowerRatio::new(t).unwrap())
                .unwrap()
                .value();
            grid_min = grid_min.min(p);
        }
        assert!(opt <= grid_min + 1e-9, "opt {opt} grid {grid_min}");
        assert!((opt - grid_min).abs() < 1e-6);
    }

    #[test]
    fn rf_outage_values() {
        let d = reference_optimum_distances();
        let p = rf_outage(&d, alpha(4.0)).unwrap();
        assert!((p.value() - 0.0878).abs() < 1e-3);
        assert!((p.value() - 0.08780335884799573).abs() < 1e-12);

        let sym = rf_outage(&dist(0.9, 1.4, 0.9, 1.4), alpha(2.0)).unwrap();
        assert_eq!(sym.value(), 0.75);
    }

    #[test]
    fn rf_outage_first_hop_limit() {
        // d_sr -> 0: the first hop is almost surely secure and the outage
        // reduces to rd/(rd+re).
        let a = alpha(3.0);
        let lp = LinkPowers::raw(&dist(0.0, 1.3, 0.8, 1.1), a);
        let expect = a.pow(1.3) / (a.pow(1.3) + a.pow(1.1));
        assert!((rf_outage_raw(&lp) - expect).abs() < 1e-15);

        // The checked operation rejects the degenerate link outright.
        assert!(matches!(
            rf_outage(&dist(0.0, 1.3, 0.8, 1.1), a),
            Err(Error::DegenerateLink { .. })
        ));
    }

    #[test]
    fn direct_outage_values() {
        assert_eq!(
            direct_outage(1.0, 1.0, alpha(4.0)).unwrap().value(),
            0.5
        );
        let p = direct_outage(1.0, 10.0, alpha(4.0)).unwrap().value();
        assert!((p - 1.0 / 10001.0).abs() < 1e-18);
        assert_eq!(direct_outage(2.0, 1.0, alpha(2.0)).unwrap().value(), 0.8);
        assert!(direct_outage(0.0, 1.0, alpha(2.0)).is_err());
    }

    #[test]
    fn identity_residual_symmetric_unit() {
        // Components are 3 = 2 + 1 exactly.
        let r = df_rf_identity_residual(&dist(1.0, 1.0, 1.0, 1.0), alpha(2.0)).unwrap();
        assert!(r.abs() < 1e-15);
    }

    #[test]
    fn identity_residual_reference_layout() {
        let d = reference_optimum_distances();
        let r = df_rf_identity_residual(&d, alpha(4.0)).unwrap();
        assert!(r.abs() < 1e-12);
    }

    #[test]
    fn identity_residual_random_sweep() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut max_res: f64 = 0.0;
        for _ in 0..1000 {
            let d = dist(
                10f64.powf(rng.gen_range(-1.0..1.0)),
                10f64.powf(rng.gen_range(-1.0..1.0)),
                10f64.powf(rng.gen_range(-1.0..1.0)),
                10f64.powf(rng.gen_range(-1.0..1.0)),
            );
            let a = alpha(rng.gen_range(2.0..4.0));
            max_res = max_res.max(df_rf_identity_residual(&d, a).unwrap().abs());
        }
        assert!(max_res < tolerances::IDENTITY_RESIDUAL, "max {max_res}");
    }

    #[test]
    fn strict_df_rf_ordering_on_complements() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..1000 {
            let d = dist(
                10f64.powf(rng.gen_range(-1.0..1.0)),
                10f64.powf(rng.gen_range(-1.0..1.0)),
                10f64.powf(rng.gen_range(-1.0..1.0)),
                10f64.powf(rng.gen_range(-1.0..1.0)),
            );
            let a = alpha(rng.gen_range(2.0..4.0));
            let q_df = df_secure_optimal(&d, a).unwrap();
            let q_rf = rf_secure(&d, a).unwrap();
            assert!(q_df < q_rf, "DF must be strictly worse: {q_df} vs {q_rf}");
        }
    }

    #[test]
    fn asymptotic_midpoint_relations() {
        let a = alpha(4.0);
        let asym = asymptotic_outages(0.5, 0.5, 1.0, 100.0, a).unwrap();
        assert!((asym.direct - 1e-8).abs() < 1e-20);
        assert!((asym.rf - 1.25e-9).abs() < 1e-21);
        assert!((asym.df - 2.5e-9).abs() < 1e-21);
        assert!((asym.rf / asym.df - 0.5).abs() < 1e-12);
        // P_RF ~ 2^(1-alpha) P_Direct at the midpoint
        assert!((asym.rf / asym.direct - 2f64.powf(1.0 - 4.0)).abs() < 1e-12);

        // alpha = 2: DF brings no benefit over direct transmission.
        let asym2 = asymptotic_outages(0.5, 0.5, 1.0, 50.0, alpha(2.0)).unwrap();
        assert!((asym2.df / asym2.direct - 1.0).abs() < 1e-12);
    }

    #[test]
    fn asymptotic_rejects_zero_eavesdropper_distance() {
        assert!(asymptotic_outages(0.5, 0.5, 1.0, 0.0, alpha(2.0)).is_err());
    }

    #[test]
    fn degenerate_and_domain_errors() {
        let a = alpha(2.0);
        assert!(matches!(
            df_outage_optimal(&dist(0.0, 1.0, 1.0, 1.0), a),
            Err(Error::DegenerateLink { .. })
        ));
        assert!(PowerRatio::new(0.0).is_err());
        assert!(PowerRatio::new(-2.0).is_err());
        assert!(PowerRatio::new(f64::INFINITY).is_err());
    }
}
