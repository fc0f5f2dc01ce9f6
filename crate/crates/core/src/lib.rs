//! Desk-scale verification workbench for convex-body duality and
//! transport-entropy inequalities.
//!
//! The crate is organized around a handful of small, exact primitives:
//!
//! * [`geometry`] — polytopes, balls and ellipsoids with exact polarity,
//!   volume and barycenter (dimensions up to 4).
//! * [`santalo`] — Santaló point computation and volume-product ledgers
//!   for the direct (Blaschke-Santaló) and reverse (Mahler) inequalities.
//! * [`sconcave`] — sampled-function duality: the L_s transform, the
//!   Legendre case, the M transform and Mahler-type functionals.
//! * [`measures`] — spherically invariant model measures (Gaussian,
//!   Barenblatt, Cauchy), histogram discretizations and relative entropy.
//! * [`transport`] — discrete optimal transport with extended-real costs:
//!   an exact network-simplex solver with dual certificates and a
//!   log-domain Sinkhorn solver.
//! * [`sphere`] — spherical grids, cone measures, the log-Minkowski
//!   fixed point and the sphere-side inequality ledgers.
//! * [`linearize`] — the Hopf-Lax linearization pipeline and the weighted
//!   Poincaré inequality.
//! * [`harness`] — deterministic batch execution, reports and plot data.
//!
//! Every inequality check produces a [`ledger::Ledger`] row recording both
//! sides, the gap, the tolerance and a verdict.

pub mod geometry;
pub mod harness;
pub mod la;
pub mod ledger;
pub mod linearize;
pub mod measures;
pub mod rng;
pub mod sconcave;
pub mod sphere;
pub mod tol;
pub mod transport;

pub mod santalo;

pub use ledger::{Ledger, Verdict};
pub use rng::Rng;
