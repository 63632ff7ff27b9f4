//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor argument violated its documented bound.
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter { name: &'static str, message: String },

    /// A quadrature or transform finished but could not certify the requested
    /// tolerance. Carries the achieved estimate so callers can decide.
    #[error("accuracy target not met in {context}: achieved {achieved:.3e}, required {required:.3e}")]
    AccuracyNotMet {
        context: String,
        achieved: f64,
        required: f64,
    },

    /// Iteration (Newton, fixed point, adaptive refinement) stalled.
    #[error("failed to converge: {0}")]
    NonConvergence(String),

    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Incompatible grids or dimensions.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A degree or isolation certificate could not be established.
    #[error("certification failed: {0}")]
    Uncertified(String),

    /// A converged field violated the positivity requirement.
    #[error("positivity violated: minimum value {0:.3e}")]
    PositivityViolation(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
