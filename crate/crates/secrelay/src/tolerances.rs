//! Numeric tolerances used by the validation suites and quadrature routines.
//!
//! Single knob per audit: every suite reads its threshold from here instead
//! of scattering magic numbers through test code.

/// Absolute bound on the DF/RF secrecy identity residual.
///
/// The identity is algebraically exact; the residual is evaluated in
/// double-double arithmetic (see `closedform::df_rf_identity_residual`), so
/// anything above this bound indicates a formula error, not rounding.
pub const IDENTITY_RESIDUAL: f64 = 1e-10;

/// Slack allowed when a ratio grid tries to beat the analytic optimal DF
/// power allocation. Covers f64 rounding of the two closed-form routes.
pub const OPTIMALITY_SLACK: f64 = 1e-12;

/// Relative tolerance for rigid-motion invariance of layout distances.
pub const RIGID_MOTION_REL: f64 = 1e-12;

/// Absolute quadrature target for the single-eavesdropper direct outage
/// integral (smooth 1-D integrand).
pub const CELL_DIRECT_QUAD_ABS: f64 = 1e-11;

/// Absolute agreement required between the alpha in {2,3,4} closed forms and
/// adaptive quadrature.
pub const CLOSED_VS_QUAD_ABS: f64 = 1e-9;

/// Absolute target for the 2-D (polar) quadrature behind the cellular relay
/// objective. Budget is split between the radial and angular passes.
pub const CELL_RELAY_QUAD_ABS: f64 = 1e-6;

/// Multiplier on the binomial standard error for Monte Carlo agreement
/// checks (99.7% two-sided coverage).
pub const MC_SIGMA_FACTOR: f64 = 3.0;

/// Relay positions closer than this to a fixed node are excluded from
/// placement searches; the closed forms are singular there.
pub const NODE_EXCLUSION: f64 = 1e-9;
