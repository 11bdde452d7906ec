//! Planar node layout, link distances, and the path-loss channel
//! parameterization shared by every other module.

use crate::error::Error;
use crate::Result;

/// A point in the plane, in normalized distance units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::Domain {
                name: "x",
                value: x,
                requirement: "finite",
            });
        }
        if !y.is_finite() {
            return Err(Error::Domain {
                name: "y",
                value: y,
                requirement: "finite",
            });
        }
        Ok(Self { x, y })
    }

    pub fn distance_to(&self, other: &Point2D) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Source, relay, destination, and eavesdropper positions.
///
/// Coincident nodes are allowed here; formulas that cannot tolerate a
/// zero-length link reject it at the point of use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourNodeLayout {
    pub source: Point2D,
    pub relay: Point2D,
    pub destination: Point2D,
    pub eavesdropper: Point2D,
}

impl FourNodeLayout {
    pub fn new(
        source: Point2D,
        relay: Point2D,
        destination: Point2D,
        eavesdropper: Point2D,
    ) -> Self {
        Self {
            source,
            relay,
            destination,
            eavesdropper,
        }
    }

    /// True when any two nodes coincide (zero link distance somewhere).
    pub fn has_coincident_nodes(&self) -> bool {
        let d = distances_from_layout(self);
        d.d_sr == 0.0 || d.d_rd == 0.0 || d.d_se == 0.0 || d.d_re == 0.0 || d.d_sd == 0.0
    }
}

/// The five pairwise link distances that parameterize every formula.
///
/// Distances are stored directly (not squared) and raised to the path-loss
/// exponent lazily, since the formulas consume `d^alpha` with varying alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Distances {
    /// source -> relay
    pub d_sr: f64,
    /// relay -> destination
    pub d_rd: f64,
    /// source -> eavesdropper
    pub d_se: f64,
    /// relay -> eavesdropper
    pub d_re: f64,
    /// source -> destination
    pub d_sd: f64,
}

impl Distances {
    pub fn new(d_sr: f64, d_rd: f64, d_se: f64, d_re: f64, d_sd: f64) -> Result<Self> {
        for (name, v) in [
            ("d_sr", d_sr),
            ("d_rd", d_rd),
            ("d_se", d_se),
            ("d_re", d_re),
            ("d_sd", d_sd),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::Domain {
                    name,
                    value: v,
                    requirement: ">= 0 and finite",
                });
            }
        }
        Ok(Self {
            d_sr,
            d_rd,
            d_se,
            d_re,
            d_sd,
        })
    }

    /// The four relay-path distances, without d_sd.
    pub fn links(&self) -> [f64; 4] {
        [self.d_sr, self.d_rd, self.d_se, self.d_re]
    }
}

/// Large-scale path-loss exponent; received mean power scales as `d^-alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLossExponent {
    alpha: f64,
}

impl PathLossExponent {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha >= 1.0) {
            return Err(Error::Domain {
                name: "alpha",
                value: alpha,
                requirement: ">= 1 and finite",
            });
        }
        Ok(Self { alpha })
    }

    pub fn value(&self) -> f64 {
        self.alpha
    }

    /// `d^alpha` for a nonnegative distance.
    pub fn pow(&self, d: f64) -> f64 {
        d.powf(self.alpha)
    }
}

/// Source and relay transmit powers. Only their ratio is observable in any
/// secure-connection outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerPair {
    pub p_s: f64,
    pub p_r: f64,
}

impl PowerPair {
    pub fn new(p_s: f64, p_r: f64) -> Result<Self> {
        for (name, v) in [("p_s", p_s), ("p_r", p_r)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain {
                    name,
                    value: v,
                    requirement: "> 0 and finite",
                });
            }
        }
        Ok(Self { p_s, p_r })
    }

    /// Relay-to-source power ratio `p_r / p_s`.
    pub fn ratio(&self) -> f64 {
        self.p_r / self.p_s
    }
}

/// Mean channel gains of the four relay-path links, i.e. the means of the
/// exponentially distributed received powers `p_i |h_ij|^2 / d_ij^alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainMeans {
    pub sr: f64,
    pub rd: f64,
    pub se: f64,
    pub re: f64,
}

impl GainMeans {
    /// Means in the fixed order (sr, rd, se, re).
    pub fn to_array(self) -> [f64; 4] {
        [self.sr, self.rd, self.se, self.re]
    }
}

/// Euclidean realization of the five link distances.
pub fn distances_from_layout(layout: &FourNodeLayout) -> Distances {
    Distances {
        d_sr: layout.source.distance_to(&layout.relay),
        d_rd: layout.relay.distance_to(&layout.destination),
        d_se: layout.source.distance_to(&layout.eavesdropper),
        d_re: layout.relay.distance_to(&layout.eavesdropper),
        d_sd: layout.source.distance_to(&layout.destination),
    }
}

/// Mean channel gains `(p_s/d_sr^a, p_r/d_rd^a, p_s/d_se^a, p_r/d_re^a)`.
///
/// Every distance must be strictly positive; a zero distance would make the
/// corresponding mean infinite.
pub fn gain_means(
    dist: &Distances,
    alpha: PathLossExponent,
    power: &PowerPair,
) -> Result<GainMeans> {
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
    Ok(GainMeans {
        sr: power.p_s / alpha.pow(dist.d_sr),
        rd: power.p_r / alpha.pow(dist.d_rd),
        se: power.p_s / alpha.pow(dist.d_se),
        re: power.p_r / alpha.pow(dist.d_re),
    })
}
