//! Power-law tail models fitted from samples.

use nalgebra::{DMatrix, DVector};

/// Tail model f(r) ~ sum_j c_j r^{-(s + j)} for r >= r_start, with s the
/// leading decay exponent. Fitted by least squares in the scaled variable
/// t = r_start / r so the design matrix stays well conditioned.
#[derive(Debug, Clone)]
pub struct TailModel {
    pub s: f64,
    pub r_start: f64,
    /// coefficients of t^j, where the model is r^{-s} * sum_j a_j t^j
    pub coef: Vec<f64>,
    /// worst relative misfit over the fitting window
    pub rel_residual: f64,
}

impl TailModel {
    /// Fit on samples (r_i, f_i) with r_i >= r_start.
    pub fn fit(r: &[f64], f: &[f64], s: f64, r_start: f64, nterms: usize) -> Self {
        let idx: Vec<usize> = (0..r.len()).filter(|&i| r[i] >= r_start * (1.0 - 1e-12)).collect();
        let m = idx.len();
        assert!(m >= nterms + 2, "not enough samples in the tail window");
        let mut a = DMatrix::zeros(m, nterms);
        let mut rhs = DVector::zeros(m);
        for (row, &i) in idx.iter().enumerate() {
            let t = r_start / r[i];
            let mut tp = 1.0;
            for j in 0..nterms {
                a[(row, j)] = tp;
                tp *= t;
            }
            rhs[row] = f[i] * r[i].powf(s);
        }
        let svd = a.clone().svd(true, true);
        let coef = svd.solve(&rhs, 1e-13).expect("tail fit SVD solve");
        let mut rel = 0.0f64;
        let scale = rhs.amax().max(1e-300);
        for (row, &i) in idx.iter().enumerate() {
            let t = r_start / r[i];
            let mut model = 0.0;
            let mut tp = 1.0;
            for j in 0..nterms {
                model += coef[j] * tp;
                tp *= t;
            }
            rel = rel.max((model - rhs[row]).abs() / scale);
        }
        Self {
            s,
            r_start,
            coef: coef.iter().copied().collect(),
            rel_residual: rel,
        }
    }

    /// Evaluate the model at r (intended for r >= r_start).
    pub fn eval(&self, r: f64) -> f64 {
        let t = self.r_start / r;
        let mut acc = 0.0;
        for c in self.coef.iter().rev() {
            acc = acc * t + c;
        }
        acc * r.powf(-self.s)
    }

    /// The model as a list of pure power terms (amplitude, exponent) with
    /// f ~ sum amplitude * r^{-exponent}.
    pub fn power_terms(&self) -> Vec<(f64, f64)> {
        self.coef
            .iter()
            .enumerate()
            .map(|(j, &c)| (c * self.r_start.powi(j as i32), self.s + j as f64))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_bubble_like_tail() {
        // f = (1 + r^2)^{-3/4}: leading exponent 3/2 with even corrections.
        let r: Vec<f64> = (0..160).map(|i| 30.0 * 1.05f64.powi(i)).collect();
        let f: Vec<f64> = r.iter().map(|&v| (1.0 + v * v).powf(-0.75)).collect();
        let model = TailModel::fit(&r, &f, 1.5, 30.0, 6);
        assert!(model.rel_residual < 1e-11, "residual {}", model.rel_residual);
        // extrapolation beyond the window
        let v = model.eval(5.0e4);
        let exact = (1.0 + 2.5e9f64).powf(-0.75);
        assert!((v - exact).abs() / exact < 1e-9);
    }
}
