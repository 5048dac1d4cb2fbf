//! Semi-analytic solver and verification harness for time-harmonic Maxwell
//! transmission problems with high contrast in magnetic permeability.
//!
//! The crate computes exact mode-matched solutions in separable geometries
//! (concentric cylinders and spheres), evaluates the boundary-layer
//! expansion of the magnetic field in powers of `eps = 1/sqrt(mu_r)` with
//! exponentially decaying profiles inside the magnetic conductor, and
//! quantifies how fast the composite approximants converge as `eps -> 0`.
//!
//! Module map:
//! - [`media`]: physical parameters and derived scalars (skin factors,
//!   the complex decay rate, stability constants).
//! - [`specfun`]: scaled complex Bessel functions, cylindrical and spherical.
//! - [`geometry`]: separable geometry descriptors, normal coordinates,
//!   curvature data, boundary-layer cutoff.
//! - [`modal`]: exact per-mode transmission solves and field evaluation.
//! - [`asymptotics`]: expansion terms, boundary-layer profiles, composite
//!   approximants, recurrence residuals.
//! - [`scalar_tp`]: the scalar transmission problem and its contrast sweep.
//! - [`analysis`]: norms, remainders, convergence-rate fitting.

pub mod analysis;
pub mod asymptotics;
pub mod error;
pub mod geometry;
pub mod media;
pub mod modal;
pub mod par;
pub mod scalar_tp;
pub mod specfun;

pub use error::{Error, Result};
