//! Numerical machinery for the perturbed fractional Q-curvature equation
//!   (-Delta)^gamma u = (1 + eps K) u^{(n+2gamma)/(n-2gamma)}  on R^n,
//! posed equivalently on the round sphere through the stereographic lift.
//!
//! The crate provides, in dependency order:
//!
//! * [`geometry`] - problem parameters, the plane/sphere conformal transport,
//!   and three independent evaluators of the fractional Laplacian;
//! * [`bubbles`] - the extremal family, its normalization constant, tangent
//!   fields and the linearized operator with its kernel diagnostics;
//! * [`reduced`] - the finite-dimensional reduced functional Gamma(mu, xi),
//!   its derivatives and homogeneous-expansion coefficients;
//! * [`degree`] - integer-certified Brouwer degree on boxes and balls in R^d,
//!   d <= 4, plus a multistart critical-point finder;
//! * [`conditions`] - machine verification of the hypotheses (K1)-(K6) and
//!   the applicability verdict;
//! * [`solver`] - the sphere-spectral Newton solver constructing the actual
//!   perturbed solutions, with continuation sweeps and integral diagnostics.

pub mod bubbles;
pub mod conditions;
pub mod degree;
pub mod error;
pub mod geometry;
pub mod numerics;
pub mod reduced;
pub mod solver;
pub mod sphere;

pub use error::{Error, Result};
pub use geometry::params::{make_params, ProblemParams};
