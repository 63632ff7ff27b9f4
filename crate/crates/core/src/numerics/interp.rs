//! Interpolation: natural cubic splines and adaptive piecewise Chebyshev.

/// Natural cubic spline through (x_i, y_i), x strictly increasing.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    x: Vec<f64>,
    y: Vec<f64>,
    /// second derivatives at the knots
    d2: Vec<f64>,
}

impl CubicSpline {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Self {
        let n = x.len();
        assert!(n >= 3 && y.len() == n);
        assert!(x.windows(2).all(|w| w[1] > w[0]), "knots must increase");
        // Thomas algorithm for the natural spline tridiagonal system.
        let mut d2 = vec![0.0; n];
        let mut u = vec![0.0; n];
        for i in 1..n - 1 {
            let sig = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
            let p = sig * d2[i - 1] + 2.0;
            d2[i] = (sig - 1.0) / p;
            let rhs = (y[i + 1] - y[i]) / (x[i + 1] - x[i]) - (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
            u[i] = (6.0 * rhs / (x[i + 1] - x[i - 1]) - sig * u[i - 1]) / p;
        }
        d2[n - 1] = 0.0;
        for i in (0..n - 1).rev() {
            d2[i] = d2[i] * d2[i + 1] + u[i];
        }
        Self { x, y, d2 }
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.x[0], *self.x.last().unwrap())
    }

    /// Evaluate; clamps to the end segments outside the knot range.
    pub fn eval(&self, s: f64) -> f64 {
        let n = self.x.len();
        let i = match self.x.binary_search_by(|v| v.partial_cmp(&s).unwrap()) {
            Ok(i) => i.min(n - 2),
            Err(0) => 0,
            Err(i) if i >= n => n - 2,
            Err(i) => i - 1,
        };
        let h = self.x[i + 1] - self.x[i];
        let a = (self.x[i + 1] - s) / h;
        let b = (s - self.x[i]) / h;
        a * self.y[i]
            + b * self.y[i + 1]
            + ((a * a * a - a) * self.d2[i] + (b * b * b - b) * self.d2[i + 1]) * h * h / 6.0
    }
}

const CHEB_DEG: usize = 16;

/// One Chebyshev panel: degree-16 interpolant on [a, b].
#[derive(Debug, Clone)]
struct ChebPanel {
    a: f64,
    b: f64,
    coef: [f64; CHEB_DEG + 1],
}

impl ChebPanel {
    fn fit<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Self {
        let n = CHEB_DEG;
        let mut vals = [0.0; CHEB_DEG + 1];
        for (j, v) in vals.iter_mut().enumerate() {
            // Chebyshev-Lobatto nodes
            let t = (std::f64::consts::PI * j as f64 / n as f64).cos();
            let x = 0.5 * (a + b) + 0.5 * (b - a) * t;
            *v = f(x);
        }
        let mut coef = [0.0; CHEB_DEG + 1];
        for (k, c) in coef.iter_mut().enumerate() {
            let mut s = 0.0;
            for (j, v) in vals.iter().enumerate() {
                let w = if j == 0 || j == n { 0.5 } else { 1.0 };
                s += w * v * (std::f64::consts::PI * (k * j) as f64 / n as f64).cos();
            }
            *c = 2.0 * s / n as f64;
        }
        coef[0] *= 0.5;
        coef[n] *= 0.5;
        Self { a, b, coef }
    }

    fn tail_estimate(&self) -> f64 {
        self.coef[CHEB_DEG - 1].abs() + self.coef[CHEB_DEG].abs()
    }

    fn eval(&self, x: f64) -> f64 {
        let t = (2.0 * x - self.a - self.b) / (self.b - self.a);
        // Clenshaw
        let mut b1 = 0.0;
        let mut b2 = 0.0;
        for k in (1..=CHEB_DEG).rev() {
            let tmp = 2.0 * t * b1 - b2 + self.coef[k];
            b2 = b1;
            b1 = tmp;
        }
        t * b1 - b2 + self.coef[0]
    }
}

/// Adaptive piecewise-Chebyshev proxy of an expensive smooth function.
/// Panels split until the coefficient tail is below `tol * scale`.
#[derive(Debug, Clone)]
pub struct ChebProxy {
    panels: Vec<ChebPanel>,
}

impl ChebProxy {
    pub fn build<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Self {
        // First pass to estimate the overall scale.
        let probe = ChebPanel::fit(f, a, b);
        let scale = probe
            .coef
            .iter()
            .map(|c| c.abs())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let mut panels = Vec::new();
        let mut stack = vec![(a, b, 0usize)];
        while let Some((lo, hi, depth)) = stack.pop() {
            let p = ChebPanel::fit(f, lo, hi);
            if p.tail_estimate() <= tol * scale || depth >= 14 {
                panels.push(p);
            } else {
                let mid = 0.5 * (lo + hi);
                stack.push((mid, hi, depth + 1));
                stack.push((lo, mid, depth + 1));
            }
        }
        panels.sort_by(|p, q| p.a.partial_cmp(&q.a).unwrap());
        Self { panels }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let i = self
            .panels
            .partition_point(|p| p.b < x)
            .min(self.panels.len() - 1);
        self.panels[i].eval(x)
    }

    /// Panel edges, useful for aligning quadrature breakpoints.
    pub fn edges(&self) -> Vec<f64> {
        let mut e: Vec<f64> = self.panels.iter().map(|p| p.a).collect();
        e.push(self.panels.last().unwrap().b);
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spline_reproduces_smooth_function() {
        let x: Vec<f64> = (0..200).map(|i| 0.05 * i as f64).collect();
        let y: Vec<f64> = x.iter().map(|&v| (v).sin() * (-0.3 * v).exp()).collect();
        let sp = CubicSpline::new(x, y);
        // natural boundary conditions cost O(h^2) near the ends; probe the
        // interior, which is what the transforms use
        let mut worst = 0.0f64;
        for i in 0..340 {
            let s = 0.5 + 0.026 * i as f64;
            let exact = s.sin() * (-0.3 * s).exp();
            worst = worst.max((sp.eval(s) - exact).abs());
        }
        assert!(worst < 2e-7, "worst spline error {worst}");
    }

    #[test]
    fn cheb_proxy_spectral_accuracy() {
        let f = |x: f64| (x.powf(1.7) + 1.0).ln() * (-x).exp();
        let proxy = ChebProxy::build(&f, 0.3, 20.0, 1e-13);
        let mut worst = 0.0f64;
        for i in 0..1000 {
            let x = 0.3 + 19.7 * (i as f64 + 0.5) / 1000.0;
            worst = worst.max((proxy.eval(x) - f(x)).abs());
        }
        assert!(worst < 1e-11, "worst cheb error {worst}");
    }
}
