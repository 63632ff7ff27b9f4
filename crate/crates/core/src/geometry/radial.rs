//! Sampled radial profiles with power-law tail extrapolation.

use crate::error::{Error, Result};
use crate::numerics::fit::TailModel;
use crate::numerics::interp::CubicSpline;

/// A radial function known by samples on a strictly increasing positive grid,
/// together with the assumed algebraic decay rate of its tail,
/// f(r) ~ C r^{decay_exponent} as r -> infinity (decay_exponent < 0).
#[derive(Debug, Clone)]
pub struct RadialFunction {
    pub nodes: Vec<f64>,
    pub values: Vec<f64>,
    pub decay_exponent: f64,
}

impl RadialFunction {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>, decay_exponent: f64) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} nodes vs {} values",
                nodes.len(),
                values.len()
            )));
        }
        if nodes.len() < 16 {
            return Err(Error::InvalidParameter {
                name: "nodes",
                message: "need at least 16 samples to resolve a profile".into(),
            });
        }
        if nodes[0] <= 0.0 || nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParameter {
                name: "nodes",
                message: "radii must be strictly increasing and positive".into(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "values",
                message: "samples must be finite".into(),
            });
        }
        if !decay_exponent.is_finite() || decay_exponent >= 0.0 {
            return Err(Error::InvalidParameter {
                name: "decay_exponent",
                message: format!("tail rate must be negative, got {decay_exponent}"),
            });
        }
        Ok(Self {
            nodes,
            values,
            decay_exponent,
        })
    }

    /// Sample a callable on a grid.
    pub fn from_fn<F: Fn(f64) -> f64>(nodes: Vec<f64>, f: F, decay_exponent: f64) -> Result<Self> {
        let values = nodes.iter().map(|&r| f(r)).collect();
        Self::new(nodes, values, decay_exponent)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

/// Logarithmically spaced grid with `per_decade` points per decade.
pub fn log_grid(r_min: f64, r_max: f64, per_decade: usize) -> Vec<f64> {
    assert!(r_min > 0.0 && r_max > r_min && per_decade >= 1);
    let decades = (r_max / r_min).log10();
    let count = (decades * per_decade as f64).round() as usize + 1;
    let step = decades / (count - 1) as f64;
    (0..count)
        .map(|i| r_min * 10f64.powf(step * i as f64))
        .collect()
}

/// Default evaluation grid used across the crate: 1e-4 .. 1e4, 64/decade.
pub fn default_grid() -> Vec<f64> {
    log_grid(1e-4, 1e4, 64)
}

/// Continuous view of a sampled profile: cubic spline in ln r between the
/// first and last node, constant below the first node (even profiles), and a
/// fitted multi-term power tail beyond a cut radius.
#[derive(Debug, Clone)]
pub struct RadialProfile {
    spline: CubicSpline,
    pub tail: TailModel,
    /// sample radii (spline knots)
    pub knots: Vec<f64>,
    r_first: f64,
    f_first: f64,
    /// radius beyond which the tail model replaces the spline
    pub r_body: f64,
}

impl RadialProfile {
    pub fn build(f: &RadialFunction) -> Result<Self> {
        let lnr: Vec<f64> = f.nodes.iter().map(|r| r.ln()).collect();
        let spline = CubicSpline::new(lnr, f.values.clone());
        let r_last = *f.nodes.last().unwrap();
        let scale = f.max_abs().max(1e-300);
        let s = -f.decay_exponent;

        // Zero tail: profile numerically dead at the outer end.
        let outer_max = f
            .nodes
            .iter()
            .zip(&f.values)
            .filter(|(r, _)| **r >= 0.25 * r_last)
            .fold(0.0f64, |m, (_, v)| m.max(v.abs()));
        if outer_max < 1e-250 || outer_max < 1e-17 * scale {
            let r_body = f
                .nodes
                .iter()
                .zip(&f.values)
                .rev()
                .find(|(_, v)| v.abs() > 1e-17 * scale)
                .map(|(r, _)| *r * 1.5)
                .unwrap_or(f.nodes[0] * 2.0)
                .min(r_last);
            return Ok(Self {
                spline,
                tail: TailModel {
                    s,
                    r_start: r_body,
                    coef: vec![0.0],
                    rel_residual: 0.0,
                },
                knots: f.nodes.clone(),
                r_first: f.nodes[0],
                f_first: f.values[0],
                r_body,
            });
        }

        // Pick the earliest cut radius whose multi-term power fit reproduces
        // the samples; earlier cuts keep the oscillatory body integral short.
        let mut best: Option<TailModel> = None;
        for frac in [256.0, 64.0, 16.0, 4.0] {
            let r_start = r_last / frac;
            if r_start < 10.0 * f.nodes[0] {
                continue;
            }
            let count = f.nodes.iter().filter(|&&r| r >= r_start).count();
            let nterms = 8usize.min(count.saturating_sub(3)).max(1);
            if count < nterms + 2 {
                continue;
            }
            let model = TailModel::fit(&f.nodes, &f.values, s, r_start, nterms);
            if model.rel_residual < 1e-10 {
                best = Some(model);
                break;
            }
            if best
                .as_ref()
                .map(|b| model.rel_residual < b.rel_residual)
                .unwrap_or(true)
            {
                best = Some(model);
            }
        }
        let tail = best.ok_or_else(|| Error::Domain("profile grid too short for a tail fit".into()))?;
        if tail.rel_residual > 1e-6 {
            return Err(Error::AccuracyNotMet {
                context: "radial tail fit".into(),
                achieved: tail.rel_residual,
                required: 1e-6,
            });
        }
        let r_body = tail.r_start;
        Ok(Self {
            spline,
            tail,
            knots: f.nodes.clone(),
            r_first: f.nodes[0],
            f_first: f.values[0],
            r_body,
        })
    }

    /// Smallest sampled radius; below it the profile is held constant.
    pub fn r_first(&self) -> f64 {
        self.r_first
    }

    #[inline]
    pub fn eval(&self, r: f64) -> f64 {
        if r <= self.r_first {
            self.f_first
        } else if r <= self.r_body {
            self.spline.eval(r.ln())
        } else {
            self.tail.eval(r)
        }
    }
}
