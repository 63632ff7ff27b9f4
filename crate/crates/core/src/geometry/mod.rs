//! Problem parameters, stereographic transport, and the fractional-Laplacian
//! evaluators that cross-validate the rest of the crate.

pub mod frac_radial;
pub mod params;
pub mod radial;

pub use frac_radial::{frac_laplacian_radial, RadialTransform};
pub use params::{make_params, ProblemParams};
pub use radial::{default_grid, log_grid, RadialFunction};
