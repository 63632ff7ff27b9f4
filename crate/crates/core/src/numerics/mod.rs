//! Shared numerical kernels: quadrature rules, Bessel evaluation, oscillatory
//! tail integrals, interpolation, and tail fitting.
//!
//! Everything here is deterministic: fixed node tables, fixed summation order.

pub mod bessel;
pub mod fit;
pub mod interp;
pub mod osc;
pub mod quad;
pub mod special;

/// Compensated (Kahan) accumulator used wherever many panel contributions of
/// mixed sign are summed.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}
