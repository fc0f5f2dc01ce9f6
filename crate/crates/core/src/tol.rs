//! Shared tolerance constants.
//!
//! Every threshold used by checks and solvers is named here rather than
//! spread as ad-hoc literals through the code.

/// Relative irredundancy tolerance for vertex and halfspace pruning,
/// measured against the body diameter.
pub const IRREDUNDANCY_REL: f64 = 1e-9;

/// Below this fraction of the local scale, float determinants are re-decided
/// in exact rational arithmetic during H↔V conversion.
pub const EXACT_FALLBACK_DET: f64 = 1e-10;

/// Default gradient-norm target for Santaló point Newton iterations.
pub const SANTALO_GRAD_TOL: f64 = 1e-8;

/// Relative tolerance of inequality ledgers.
pub const LEDGER_REL: f64 = 1e-6;

/// Interior margin (relative to diameter) kept by damped Newton backtracking.
pub const NEWTON_MARGIN_REL: f64 = 1e-6;

/// Marginal feasibility of exact transport plans.
pub const PLAN_MARGINAL: f64 = 1e-10;

/// Dual feasibility slack allowed on Kantorovich potentials.
pub const DUAL_FEAS: f64 = 1e-9;

/// Relative duality-gap bound certified on every exact solve.
pub const DUAL_GAP_REL: f64 = 1e-8;

/// Sinkhorn stopping rule on the L1 marginal residual.
pub const SINKHORN_RESIDUAL: f64 = 1e-9;

/// Equal-total-mass tolerance for transport inputs.
pub const MASS_BALANCE: f64 = 1e-10;

/// Largest instance side accepted by the exact solver.
pub const EXACT_SOLVER_CAP: usize = 5_000;

/// Slack for discrete class-membership (monotonicity/convexity) checks,
/// relative to the sample scale.
pub const CLASS_CHECK_REL: f64 = 1e-9;

/// s values closer to zero than this take the log-concave (s = 0) branch.
pub const S_ZERO_BRANCH: f64 = 1e-8;

/// Point-matching tolerance when verifying symmetry of discrete measures.
pub const SYMMETRY_POINT: f64 = 1e-9;

/// Weight-matching tolerance when verifying symmetry of discrete measures.
pub const SYMMETRY_WEIGHT: f64 = 1e-12;
