//! Bessel functions of the first kind for the radial Fourier kernels.
//!
//! Only the orders appearing in dimensions 1..3 are needed: J_{-1/2} and
//! J_{1/2} are exact trigonometric expressions, J_0 uses the power series for
//! small argument and the Hankel asymptotic expansion for large argument
//! (absolute accuracy ~5e-12 near the switch point, better elsewhere).

use num_complex::Complex64;

/// Bessel order as it appears in the radial transforms: nu = n/2 - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialOrder {
    /// n = 1
    MinusHalf,
    /// n = 2
    Zero,
    /// n = 3
    PlusHalf,
}

impl RadialOrder {
    pub fn from_dim(n: usize) -> Self {
        match n {
            1 => Self::MinusHalf,
            2 => Self::Zero,
            3 => Self::PlusHalf,
            _ => panic!("unsupported dimension {n}"),
        }
    }

    pub fn nu(self) -> f64 {
        match self {
            Self::MinusHalf => -0.5,
            Self::Zero => 0.0,
            Self::PlusHalf => 0.5,
        }
    }
}

const J0_SWITCH: f64 = 15.0;

/// J_0 by power series, |x| <= J0_SWITCH.
fn j0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..80 {
        let kf = k as f64;
        term *= -q / (kf * kf);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    sum
}

/// Hankel asymptotic coefficients A_k(nu) = prod_{m=1..k} (4 nu^2 - (2m-1)^2) / (8 m).
fn hankel_coeffs(nu: f64, kmax: usize) -> Vec<f64> {
    let mu = 4.0 * nu * nu;
    let mut a = Vec::with_capacity(kmax + 1);
    a.push(1.0);
    for m in 1..=kmax {
        let mf = m as f64;
        let num = mu - (2.0 * mf - 1.0) * (2.0 * mf - 1.0);
        let prev = *a.last().unwrap();
        a.push(prev * num / (8.0 * mf));
    }
    a
}

/// Complex Hankel amplitude S(x) = sum_k i^k A_k(nu) x^{-k}, truncated at the
/// minimal term, so that J_nu(x) = Re[ sqrt(2/(pi x)) e^{i(x - nu pi/2 - pi/4)} S(x) ].
fn hankel_amplitude(nu: f64, x: f64) -> Complex64 {
    let coeffs = hankel_coeffs(nu, 20);
    let mut s = Complex64::new(0.0, 0.0);
    let mut ipow = Complex64::new(1.0, 0.0);
    let mut xpow = 1.0;
    let mut last = f64::INFINITY;
    for a in coeffs {
        let mag = (a / xpow).abs();
        if mag > last {
            break; // asymptotic series: stop at the smallest term
        }
        s += ipow * (a / xpow);
        if mag < 1e-18 {
            break;
        }
        last = mag;
        ipow *= Complex64::new(0.0, 1.0);
        xpow *= x;
    }
    s
}

fn j0_asymptotic(x: f64) -> f64 {
    let s = hankel_amplitude(0.0, x);
    let phase = x - std::f64::consts::FRAC_PI_4;
    let e = Complex64::new(phase.cos(), phase.sin());
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (e * s).re
}

/// Bessel function J_0(x) for x >= 0.
pub fn j0(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x <= J0_SWITCH {
        j0_series(x)
    } else {
        j0_asymptotic(x)
    }
}

/// J_nu(x) for the three radial orders, x > 0.
pub fn j_radial(order: RadialOrder, x: f64) -> f64 {
    match order {
        RadialOrder::MinusHalf => (2.0 / (std::f64::consts::PI * x)).sqrt() * x.cos(),
        RadialOrder::Zero => j0(x),
        RadialOrder::PlusHalf => (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sin(),
    }
}

/// sin(x)/x, series near zero.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let q = x * x;
        1.0 - q / 6.0 * (1.0 - q / 20.0)
    } else {
        x.sin() / x
    }
}

pub(crate) fn hankel_terms(nu: f64, kmax: usize) -> Vec<f64> {
    hankel_coeffs(nu, kmax)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values from Abramowitz & Stegun / mpmath.
    const J0_REF: [(f64, f64); 7] = [
        (0.5, 0.938469807240813),
        (1.0, 0.7651976865579666),
        (5.0, -0.17759677131433830),
        (10.0, -0.24593576445134835),
        (15.0, -0.014224472826780773),
        (20.0, 0.16702466434058315),
        (100.0, 0.019985850304223122),
    ];

    #[test]
    fn j0_reference_values() {
        for (x, v) in J0_REF {
            assert!((j0(x) - v).abs() < 5e-12, "J0({x}) = {} vs {v}", j0(x));
        }
    }

    #[test]
    fn j0_continuity_at_switch() {
        let below = j0_series(J0_SWITCH);
        let above = j0_asymptotic(J0_SWITCH);
        assert!((below - above).abs() < 8e-12);
    }

    #[test]
    fn half_orders_are_trig() {
        let x = 2.7;
        let jm = j_radial(RadialOrder::MinusHalf, x);
        let jp = j_radial(RadialOrder::PlusHalf, x);
        let c = (2.0 / (std::f64::consts::PI * x)).sqrt();
        assert!((jm - c * x.cos()).abs() < 1e-16);
        assert!((jp - c * x.sin()).abs() < 1e-16);
    }

    #[test]
    fn half_order_hankel_series_is_exact() {
        // 4 nu^2 = 1 kills every coefficient past A_0.
        let c = hankel_terms(0.5, 6);
        for a in &c[1..] {
            assert_eq!(*a, 0.0);
        }
    }
}
