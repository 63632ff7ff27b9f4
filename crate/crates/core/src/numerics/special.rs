//! Thin gamma-function helpers on top of `statrs`.

use statrs::function::gamma::{gamma, ln_gamma};

/// Gamma(a) / Gamma(b) for positive arguments, computed in log space.
pub fn gamma_ratio(a: f64, b: f64) -> f64 {
    debug_assert!(a > 0.0 && b > 0.0);
    (ln_gamma(a) - ln_gamma(b)).exp()
}

/// |Gamma(-g)| for non-integer g > 0, via the reflection formula.
pub fn abs_gamma_neg(g: f64) -> f64 {
    debug_assert!(g > 0.0 && g.fract() != 0.0);
    std::f64::consts::PI / ((std::f64::consts::PI * g).sin().abs() * gamma(1.0 + g))
}

/// Euler beta function B(a, b).
pub fn beta(a: f64, b: f64) -> f64 {
    (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp()
}

/// Surface measure of the unit sphere S^{n-1} in R^n.
pub fn sphere_area(n: usize) -> f64 {
    let nf = n as f64;
    2.0 * std::f64::consts::PI.powf(nf / 2.0) / gamma(nf / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_ratio_matches_direct() {
        assert_relative_eq!(gamma_ratio(2.5, 0.5), 0.75, max_relative = 1e-14);
        assert_relative_eq!(gamma_ratio(5.0, 3.0), 12.0, max_relative = 1e-14);
    }

    #[test]
    fn reflection_formula_for_negative_gamma() {
        // Gamma(-1/2) = -2 sqrt(pi)
        assert_relative_eq!(
            abs_gamma_neg(0.5),
            2.0 * std::f64::consts::PI.sqrt(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn sphere_areas() {
        assert_relative_eq!(sphere_area(1), 2.0, max_relative = 1e-14);
        assert_relative_eq!(sphere_area(2), 2.0 * std::f64::consts::PI, max_relative = 1e-14);
        assert_relative_eq!(sphere_area(3), 4.0 * std::f64::consts::PI, max_relative = 1e-14);
    }
}
