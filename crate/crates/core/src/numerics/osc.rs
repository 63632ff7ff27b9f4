//! Oscillatory tail integrals with algebraic amplitudes.
//!
//! These give the analytic tail corrections that make the radial Fourier
//! transform of slowly decaying profiles accurate: truncated power-law tails
//! integrate against the Bessel kernel in closed form down to incomplete
//! oscillatory integrals, which are summed here by integration by parts.
//! Integrals that do not converge classically are Abel-regularized, which is
//! the distributional sense the transform itself is defined in.

use num_complex::Complex64;

use super::bessel::{hankel_terms, j_radial, RadialOrder};
use super::quad::{gauss, tanh_sinh};
use super::special::gamma_ratio;
use super::KahanSum;

/// Abel-regularized incomplete oscillatory integral
///   I(b, x) = int_x^infty u^b e^{iu} du,
/// by the integration-by-parts asymptotic series. Requires x >= 30 so the
/// series reaches machine precision before its smallest term.
pub fn osc_exp_tail(b: f64, x: f64) -> Complex64 {
    debug_assert!(x >= 30.0);
    let mut term = Complex64::new(0.0, 1.0);
    let mut sum = term;
    let mut last = term.norm();
    for k in 0..200 {
        term *= Complex64::new(0.0, 1.0) * ((b - k as f64) / x);
        let mag = term.norm();
        if mag > last {
            break; // smallest-term truncation
        }
        sum += term;
        last = mag;
        if mag < 1e-18 * sum.norm().max(1e-300) {
            break;
        }
    }
    let phase = Complex64::new(x.cos(), x.sin());
    phase * x.powf(b) * sum
}

/// Abel-regularized total integral int_0^infty u^b J_nu(u) du
///   = 2^b Gamma((nu + b + 1)/2) / Gamma((nu - b + 1)/2).
pub fn ws_total(order: RadialOrder, b: f64) -> f64 {
    let nu = order.nu();
    assert!(
        b + nu > -1.0 && b <= nu + 1.0,
        "ws_total out of range: b = {b}, nu = {nu}"
    );
    if b == nu + 1.0 {
        return 0.0; // Gamma pole in the denominator
    }
    2.0f64.powf(b) * gamma_ratio(0.5 * (nu + b + 1.0), 0.5 * (nu - b + 1.0))
}

/// int_0^x u^b J_nu(u) du by direct quadrature (x <= ~50).
fn partial_bessel(order: RadialOrder, b: f64, x: f64) -> f64 {
    let u0 = x.min(2.0);
    let (head, _) = tanh_sinh(|u| u.powf(b) * j_radial(order, u), 0.0, u0, 1e-14);
    let mut acc = KahanSum::new();
    acc.add(head);
    let rule = gauss(16);
    let mut a = u0;
    while a < x - 1e-12 {
        let bseg = (a + std::f64::consts::PI).min(x);
        acc.add(rule.integrate(a, bseg, |u| u.powf(b) * j_radial(order, u)));
        a = bseg;
    }
    acc.value()
}

const TAIL_SWITCH: f64 = 40.0;

/// Abel-regularized tail integral int_x^infty u^b J_nu(u) du.
///
/// Requires b < nu + 1 (regularizability) and b + nu > -1.
pub fn bessel_tail(order: RadialOrder, b: f64, x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < TAIL_SWITCH {
        ws_total(order, b) - partial_bessel(order, b, x)
    } else {
        bessel_tail_asymptotic(order, b, x)
    }
}

/// Asymptotic-phase branch of [`bessel_tail`], valid for x >= 30: the Hankel
/// expansion of J_nu term-by-term against [`osc_exp_tail`]. For half-integer
/// orders the expansion is a single exact term.
pub fn bessel_tail_asymptotic(order: RadialOrder, b: f64, x: f64) -> f64 {
    let nu = order.nu();
    let coeffs = hankel_terms(nu, 18);
    let phi = 0.5 * nu * std::f64::consts::PI + std::f64::consts::FRAC_PI_4;
    let pref = (2.0 / std::f64::consts::PI).sqrt() * Complex64::new(phi.cos(), -phi.sin());
    let mut sum = Complex64::new(0.0, 0.0);
    let mut ipow = Complex64::new(1.0, 0.0);
    let mut xpow = 1.0;
    let mut last = f64::INFINITY;
    for (k, a) in coeffs.iter().enumerate() {
        let mag = (a / xpow).abs();
        if mag > last {
            break;
        }
        if *a != 0.0 {
            // the u^{-k} from the Hankel term is folded into the exponent
            sum += ipow * *a * osc_exp_tail(b - 0.5 - k as f64, x);
        }
        last = mag;
        if mag < 1e-18 {
            break;
        }
        ipow *= Complex64::new(0.0, 1.0);
        xpow *= x;
    }
    (pref * sum).re
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exp_tail_exact_for_b_zero() {
        // int_x^infty e^{iu} du = i e^{ix} (Abel)
        let x = 35.0;
        let v = osc_exp_tail(0.0, x);
        assert_relative_eq!(v.re, -x.sin(), max_relative = 1e-14);
        assert_relative_eq!(v.im, x.cos(), max_relative = 1e-14);
    }

    #[test]
    fn exp_tail_against_quadrature_with_decay() {
        // b = -1.2 converges classically; brute-force panels to a far cutoff
        // T, then close the remainder with the two-term parts formula
        // int_T^inf u^b e^{iu} du = i T^b e^{iT} (1 + i b / T) + O(T^{b-2}).
        let b = -1.2;
        let x = 40.0;
        let v = osc_exp_tail(b, x);
        let mut acc = Complex64::new(0.0, 0.0);
        let rule = gauss(24);
        let mut a = x;
        for _ in 0..20_000 {
            let hi = a + std::f64::consts::PI;
            acc.re += rule.integrate(a, hi, |u| u.powf(b) * u.cos());
            acc.im += rule.integrate(a, hi, |u| u.powf(b) * u.sin());
            a = hi;
        }
        let big_t = a;
        let remainder = Complex64::new(0.0, 1.0)
            * big_t.powf(b)
            * Complex64::new(big_t.cos(), big_t.sin())
            * (Complex64::new(1.0, b / big_t));
        let oracle = acc + remainder;
        assert!((v - oracle).norm() < 1e-12, "diff {:e}", (v - oracle).norm());
    }

    #[test]
    fn ws_total_j0_is_one() {
        assert_relative_eq!(ws_total(RadialOrder::Zero, 0.0), 1.0, max_relative = 1e-13);
    }

    #[test]
    fn cosine_tail_closed_form() {
        // int_x^infty u^{1/2} J_{-1/2}(u) du = sqrt(2/pi) * (-sin x), Abel.
        let c = (2.0 / std::f64::consts::PI).sqrt();
        for &x in &[5.0, 20.0, 39.0, 41.0, 80.0] {
            let v = bessel_tail(RadialOrder::MinusHalf, 0.5, x);
            assert!(
                (v - (-c * x.sin())).abs() < 2e-12,
                "x = {x}: {v} vs {}",
                -c * x.sin()
            );
        }
    }

    #[test]
    fn sine_tail_closed_form() {
        // int_x^infty u^{1/2} J_{1/2}(u) du = sqrt(2/pi) * cos x, Abel.
        let c = (2.0 / std::f64::consts::PI).sqrt();
        for &x in &[3.0, 25.0, 39.5, 45.0] {
            let v = bessel_tail(RadialOrder::PlusHalf, 0.5, x);
            assert!((v - c * x.cos()).abs() < 2e-12, "x = {x}");
        }
    }

    #[test]
    fn j0_tail_branches_agree_at_switch() {
        for &b in &[-0.9, -0.3, 0.0, 0.4, 0.9] {
            let below = ws_total(RadialOrder::Zero, b) - partial_bessel(RadialOrder::Zero, b, 39.9);
            let above = bessel_tail_asymptotic(RadialOrder::Zero, b, 39.9);
            assert!(
                (below - above).abs() < 5e-11,
                "b = {b}: {below} vs {above}"
            );
        }
    }
}
