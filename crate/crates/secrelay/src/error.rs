//! Error type shared by all modules.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A link distance is zero (or treated as zero) where the formula needs a
    /// strictly positive distance. The mean channel gain of such a link is
    /// infinite and must be special-cased by the caller.
    DegenerateLink { link: &'static str },
    /// A parameter is outside its valid domain.
    Domain {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },
    /// An exact cell-edge constant was requested for a path-loss exponent
    /// that has no closed form here.
    UnsupportedAlpha { alpha: f64 },
    /// A DF power ratio exceeds the scenario's cap.
    RatioAboveCap { ratio: f64, cap: f64 },
    /// A Monte Carlo configuration is inconsistent.
    InvalidConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateLink { link } => {
                write!(f, "degenerate link: {link} has zero distance")
            }
            Error::Domain {
                name,
                value,
                requirement,
            } => write!(f, "domain error: {name} = {value} must satisfy {requirement}"),
            Error::UnsupportedAlpha { alpha } => write!(
                f,
                "no exact cell-edge constant for alpha = {alpha}; supported: 2, 3, 4"
            ),
            Error::RatioAboveCap { ratio, cap } => {
                write!(f, "power ratio {ratio} exceeds cap {cap}")
            }
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
