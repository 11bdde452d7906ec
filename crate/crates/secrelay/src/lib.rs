//! Secure-connection analysis for two-hop relay wiretap networks.
//!
//! A transmission is *securely connected* when the secrecy rate
//! `R_s = max(R_d - R_e, 0)` is strictly positive, i.e. the destination's
//! channel beats the eavesdropper's. Over Rayleigh block fading with
//! power-law path loss this event has closed-form probability for three
//! schemes:
//!
//! * **Direct** - single hop source -> destination,
//! * **DF** (decode-and-forward) - the relay reuses the source codebook, so
//!   the eavesdropper combines both hops,
//! * **RF** (randomize-and-forward) - independent codebooks per hop, so each
//!   hop must be secured individually.
//!
//! The crate provides those closed forms ([`closedform`]), an independent
//! Monte Carlo fading oracle ([`montecarlo`]), relay-placement and
//! power-ratio optimization ([`optimizer`]), and a cellular scenario with
//! eavesdroppers scattered uniformly over a disk cell ([`cellular`]).
//!
//! All distances are unitless; in the cellular scenario the cell radius acts
//! as the normalizing length.

pub mod cellular;
pub mod closedform;
mod dd;
pub mod error;
pub mod geometry;
pub mod montecarlo;
pub mod optimizer;
pub mod quad;
pub mod tolerances;

pub use error::Error;
pub use geometry::{Distances, FourNodeLayout, PathLossExponent, Point2D, PowerPair};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// The two relaying schemes under comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelayStrategy {
    /// Decode-and-forward: shared codebook, eavesdropper combines both hops.
    Df,
    /// Randomize-and-forward: independent codebooks, per-hop secrecy.
    Rf,
}

impl std::fmt::Display for RelayStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RelayStrategy::Df => "df",
            RelayStrategy::Rf => "rf",
        })
    }
}
