//! Gauss-Legendre and tanh-sinh quadrature.

use std::sync::OnceLock;

/// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// Newton iteration on the Legendre polynomial; machine-precision nodes.
    fn compute(m: usize) -> Self {
        let mut nodes = vec![0.0; m];
        let mut weights = vec![0.0; m];
        let n = m as f64;
        for i in 0..m.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // Legendre recurrence for P_m(x) and P'_m(x).
                let mut p0 = 1.0;
                let mut p1 = x;
                for k in 2..=m {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes[i] = -x;
            nodes[m - 1 - i] = x;
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[m - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Integrate f over [a, b].
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let c = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + c * x);
        }
        acc * c
    }
}

static RULES: OnceLock<Vec<GaussRule>> = OnceLock::new();
const RULE_SIZES: [usize; 7] = [4, 6, 8, 12, 16, 24, 32];

/// Cached Gauss-Legendre rule; m must be one of the precomputed sizes.
pub fn gauss(m: usize) -> &'static GaussRule {
    let rules = RULES.get_or_init(|| RULE_SIZES.iter().map(|&s| GaussRule::compute(s)).collect());
    let idx = RULE_SIZES
        .iter()
        .position(|&s| s == m)
        .unwrap_or_else(|| panic!("no cached Gauss rule of size {m}"));
    &rules[idx]
}

/// Adaptive Gauss integration of a smooth function on [a, b]: bisects until
/// the 16- vs 24-point results agree to `tol` (relative to the global scale).
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        tol_abs: f64,
        depth: usize,
        err: &mut f64,
    ) -> f64 {
        let coarse = gauss(16).integrate(a, b, |x| f(x));
        let fine = gauss(24).integrate(a, b, |x| f(x));
        let delta = (fine - coarse).abs();
        if delta <= tol_abs || depth >= 28 {
            *err += delta;
            return fine;
        }
        let m = 0.5 * (a + b);
        recurse(f, a, m, 0.5 * tol_abs, depth + 1, err)
            + recurse(f, m, b, 0.5 * tol_abs, depth + 1, err)
    }
    let scale = gauss(16)
        .integrate(a, b, |x| f(x).abs())
        .abs()
        .max(f64::MIN_POSITIVE);
    let mut err = 0.0;
    let v = recurse(f, a, b, tol * scale, 0, &mut err);
    (v, err)
}

/// One level of precomputed tanh-sinh abscissae. `dist` is the distance of the
/// node from the nearer endpoint of [-1, 1]; stored directly to avoid
/// cancellation near the endpoints.
struct TsLevel {
    /// (distance-from-endpoint, weight) for j >= 1 at this refinement level.
    pairs: Vec<(f64, f64)>,
}

struct TsTable {
    /// weight of the central node (j = 0) at h = 1.
    w0: f64,
    levels: Vec<TsLevel>,
}

static TS: OnceLock<TsTable> = OnceLock::new();

fn ts_table() -> &'static TsTable {
    TS.get_or_init(|| {
        let h0 = 1.0;
        let max_level = 12usize;
        let mut levels = Vec::new();
        for lvl in 0..=max_level {
            let h = h0 / (1u64 << lvl) as f64;
            let mut pairs = Vec::new();
            let mut j = 1u64;
            loop {
                // At refinement level l > 0 only odd j are new nodes.
                let t = j as f64 * h;
                let v = 0.5 * std::f64::consts::PI * t.sinh();
                // distance from endpoint: 1 - tanh(v) = 2 / (e^{2v} + 1)
                let dist = 2.0 / ((2.0 * v).exp() + 1.0);
                let w = 0.5 * std::f64::consts::PI * t.cosh() / v.cosh().powi(2);
                if dist < 1e-290 || w < 1e-290 {
                    break;
                }
                pairs.push((dist, w));
                j += if lvl == 0 { 1 } else { 2 };
            }
            levels.push(TsLevel { pairs });
        }
        TsTable {
            w0: 0.5 * std::f64::consts::PI,
            levels,
        }
    })
}

/// Tanh-sinh (double exponential) quadrature on [a, b].
///
/// Handles integrable algebraic endpoint singularities. The integrand is
/// evaluated at points strictly inside (a, b); when an endpoint is 0 the node
/// positions near it are exact small offsets, so profiles like x^alpha with
/// alpha > -1 are integrated to near machine precision.
///
/// Returns (value, error estimate).
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let table = ts_table();
    let c = 0.5 * (b - a);
    let eval = |dist: f64, toward_b: bool| -> f64 {
        let x = if toward_b { b - c * dist } else { a + c * dist };
        let y = f(x);
        if y.is_finite() {
            y
        } else {
            0.0
        }
    };

    // Level 0 (h = 1).
    let mut sum = table.w0 * f(0.5 * (a + b));
    for &(dist, w) in &table.levels[0].pairs {
        sum += w * (eval(dist, false) + eval(dist, true));
    }
    let mut h = 1.0;
    let mut prev = sum * c * h;
    let mut best_err = f64::INFINITY;
    for lvl in 1..table.levels.len() {
        h *= 0.5;
        for &(dist, w) in &table.levels[lvl].pairs {
            sum += w * (eval(dist, false) + eval(dist, true));
        }
        let cur = sum * c * h;
        let err = (cur - prev).abs();
        prev = cur;
        best_err = err;
        if err <= tol * cur.abs().max(1e-300) && lvl >= 3 {
            return (cur, err);
        }
    }
    (prev, best_err)
}
