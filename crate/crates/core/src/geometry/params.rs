//! Problem parameters: dimension, fractional order, critical exponents.

use serde::Serialize;

use crate::error::{Error, Result};

/// Dimension n, order gamma in (0, n/2), and the derived critical exponents.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProblemParams {
    pub n: usize,
    pub gamma: f64,
    /// critical exponent p = (n + 2 gamma) / (n - 2 gamma)
    pub p: f64,
    /// Sobolev exponent 2n / (n - 2 gamma) = p + 1
    pub two_star: f64,
}

impl ProblemParams {
    /// (n - 2 gamma) / 2, the decay rate of the bubble profile.
    pub fn bubble_rate(&self) -> f64 {
        0.5 * (self.n as f64 - 2.0 * self.gamma)
    }
}

/// Validated constructor. Rejects n outside 1..=3 and gamma outside (0, n/2).
pub fn make_params(n: usize, gamma: f64) -> Result<ProblemParams> {
    if n == 0 || n > 3 {
        return Err(Error::InvalidParameter {
            name: "n",
            message: format!("dimension must satisfy 1 <= n <= 3, got {n}"),
        });
    }
    let half_n = n as f64 / 2.0;
    if !(gamma > 0.0 && gamma < half_n) {
        return Err(Error::InvalidParameter {
            name: "gamma",
            message: format!("gamma must lie in (0, n/2) = (0, {half_n}), got {gamma}"),
        });
    }
    let nf = n as f64;
    Ok(ProblemParams {
        n,
        gamma,
        p: (nf + 2.0 * gamma) / (nf - 2.0 * gamma),
        two_star: 2.0 * nf / (nf - 2.0 * gamma),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_yamabe_exponent() {
        let p = make_params(3, 1.0).unwrap();
        assert_eq!(p.p, 5.0);
        assert_eq!(p.two_star, 6.0);
    }

    #[test]
    fn one_dimensional_quarter() {
        let p = make_params(1, 0.25).unwrap();
        assert_eq!(p.p, 3.0);
        assert_eq!(p.two_star, 4.0);
    }

    #[test]
    fn exponent_identity_holds_exactly() {
        for &(n, g) in &[(1usize, 0.25), (2, 0.5), (2, 0.75), (3, 0.5), (3, 1.0)] {
            let p = make_params(n, g).unwrap();
            assert_eq!(p.two_star, p.p + 1.0);
        }
    }

    #[test]
    fn boundary_gamma_rejected() {
        assert!(make_params(2, 1.0).is_err());
        assert!(make_params(1, 0.5).is_err());
        assert!(make_params(3, 0.0).is_err());
        assert!(make_params(3, -0.2).is_err());
        assert!(make_params(0, 0.1).is_err());
        assert!(make_params(4, 0.5).is_err());
    }
}
