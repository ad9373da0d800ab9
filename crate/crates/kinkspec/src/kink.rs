//! Kink profiles: the closed-form exact kink and the quadrature-built
//! mollified kink.
//!
//! A kink solves `s'' = U'(s)` with `s(±∞) = ±1`, `s(0) = 0`. First
//! integration gives the energy identity `(s')²/2 = U(s)` (the integration
//! constant vanishes at the vacua), so the profile is recovered by inverting
//! `x(s) = int_0^s du / sqrt(2 U(u))`. For mollified potentials the
//! integrand is smooth up to a logarithmic blow-up at `s = 1`; beyond the
//! blend zone the potential is exactly quadratic, so the profile continues
//! as the exponential tail `1 - c e^{-m x}`.

use crate::error::{Error, Result};
use crate::potential::{ModelKind, PotentialModel};
use crate::quad::{adaptive_simpson, gl20};

/// Switch to the analytic tail once `1 - s` falls below this.
const S_TAIL: f64 = 1e-6;

/// Cells of the internal cumulative-quadrature grid on `[0, gamma+eps]`.
const CDF_CELLS: usize = 2048;

#[derive(Debug, Clone, Default)]
struct Backbone {
    x: Vec<f64>,
    s: Vec<f64>,
    ds: Vec<f64>,
}

/// An evaluatable kink profile tied to its potential model.
///
/// For mollified models the profile is a monotone table at the requested
/// samples plus the exact exponential tail; evaluation between interior
/// samples uses cubic Hermite interpolation, so accuracy between nodes is
/// set by the sample density (`~(dx)^4`; a 0.01 grid gives ~1e-10).
#[derive(Debug, Clone)]
pub struct KinkProfile {
    pub model: PotentialModel,
    /// Sample abscissae as requested by the caller.
    pub x: Vec<f64>,
    /// Kink values at `x`.
    pub s: Vec<f64>,
    /// Kink slopes at `x`, `sqrt(2 U(s))`.
    pub ds: Vec<f64>,
    /// Abscissa beyond which the exponential tail formula is used; for the
    /// mollified kink this is where the profile leaves the blend zone
    /// (`s = gamma + eps`) and the formula becomes exact.
    pub tail_switch: f64,
    /// Tail amplitude: `s(x) = 1 - tail_c e^{-m x}` for `x >= tail_switch`.
    pub tail_c: f64,
    /// Abscissa where the kink enters the blend zone (`s = gamma - eps`);
    /// equals `q` for the exact kink. `W = U''(s(x))` is constant outside
    /// `[x_blend_lo, tail_switch]`.
    pub x_blend_lo: f64,
    backbone: Backbone,
}

impl KinkProfile {
    /// Closed-form profile of the exact kink.
    pub fn exact(model: &PotentialModel) -> KinkProfile {
        assert!(
            matches!(model.kind, ModelKind::Exact),
            "KinkProfile::exact needs an exact model"
        );
        let p = model.params;
        KinkProfile {
            model: model.clone(),
            x: Vec::new(),
            s: Vec::new(),
            ds: Vec::new(),
            tail_switch: p.q,
            tail_c: -p.a,
            x_blend_lo: p.q,
            backbone: Backbone::default(),
        }
    }

    /// Kink value at any `x` (odd extension).
    pub fn eval(&self, x: f64) -> f64 {
        let a = x.abs();
        let v = match self.model.kind {
            ModelKind::Exact => crate::params::kink_exact(&self.model.params, a),
            ModelKind::Mollified => {
                if a >= self.tail_switch {
                    1.0 - self.tail_c * (-self.model.params.m() * a).exp()
                } else {
                    self.backbone.hermite(a)
                }
            }
        };
        if x < 0.0 {
            -v
        } else {
            v
        }
    }

    /// Kink slope at any `x`. Computed as `sqrt(2 U(s(x)))`, so the energy
    /// identity holds to round-off by construction.
    pub fn eval_deriv(&self, x: f64) -> f64 {
        match self.model.kind {
            ModelKind::Exact => crate::params::kink_exact_deriv(&self.model.params, x),
            ModelKind::Mollified => {
                let u = self.model.value(self.eval(x), 0);
                (2.0 * u.max(0.0)).sqrt()
            }
        }
    }
}

impl Backbone {
    /// Cubic Hermite interpolation on the nonnegative backbone.
    fn hermite(&self, a: f64) -> f64 {
        let n = self.x.len();
        debug_assert!(n >= 2, "backbone must cover [0, tail_switch]");
        // binary search for the cell
        let i = match self.x.binary_search_by(|v| v.partial_cmp(&a).unwrap()) {
            Ok(i) => return self.s[i],
            Err(0) => 0,
            Err(i) if i >= n => n - 2,
            Err(i) => i - 1,
        };
        let h = self.x[i + 1] - self.x[i];
        let t = (a - self.x[i]) / h;
        let (s0, s1) = (self.s[i], self.s[i + 1]);
        let (d0, d1) = (self.ds[i] * h, self.ds[i + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        (2.0 * t3 - 3.0 * t2 + 1.0) * s0
            + (t3 - 2.0 * t2 + t) * d0
            + (-2.0 * t3 + 3.0 * t2) * s1
            + (t3 - t2) * d1
    }
}

/// Cumulative quadrature of `1/sqrt(2 U_eps)`, with Newton-refined inversion.
struct KinkSolver<'a> {
    model: &'a PotentialModel,
    s_grid: Vec<f64>,
    x_grid: Vec<f64>,
}

impl<'a> KinkSolver<'a> {
    fn new(model: &'a PotentialModel) -> KinkSolver<'a> {
        let s_max = model.params.gamma + model.epsilon;
        let h = s_max / CDF_CELLS as f64;
        let f = |u: f64| 1.0 / (2.0 * model.value(u, 0)).sqrt();
        let mut s_grid = Vec::with_capacity(CDF_CELLS + 1);
        let mut x_grid = Vec::with_capacity(CDF_CELLS + 1);
        s_grid.push(0.0);
        x_grid.push(0.0);
        let mut acc = 0.0;
        for i in 0..CDF_CELLS {
            let a = i as f64 * h;
            acc += gl20(f, a, a + h);
            s_grid.push(a + h);
            x_grid.push(acc);
        }
        KinkSolver {
            model,
            s_grid,
            x_grid,
        }
    }

    fn x_switch(&self) -> f64 {
        *self.x_grid.last().unwrap()
    }

    /// `x(s)` by cumulative table plus one partial cell.
    fn x_of_s(&self, s: f64) -> f64 {
        let h = self.s_grid[1];
        let i = ((s / h) as usize).min(CDF_CELLS - 1);
        let f = |u: f64| 1.0 / (2.0 * self.model.value(u, 0)).sqrt();
        self.x_grid[i] + gl20(f, self.s_grid[i], s)
    }

    /// Invert `x(s) = x` for `x` in `[0, x_switch]`.
    fn s_of_x(&self, x: f64) -> f64 {
        debug_assert!(x >= 0.0);
        // bracket on the cumulative table, then Newton with the exact
        // derivative ds/dx = sqrt(2 U(s))
        let j = self
            .x_grid
            .partition_point(|&v| v < x)
            .clamp(1, CDF_CELLS);
        let (x0, x1) = (self.x_grid[j - 1], self.x_grid[j]);
        let (s0, s1) = (self.s_grid[j - 1], self.s_grid[j]);
        let mut s = s0 + (s1 - s0) * (x - x0) / (x1 - x0).max(1e-300);
        let s_max = self.model.params.gamma + self.model.epsilon;
        for _ in 0..4 {
            let resid = x - self.x_of_s(s);
            let slope = (2.0 * self.model.value(s, 0)).sqrt();
            s = (s + resid * slope).clamp(0.0, s_max);
        }
        s
    }
}

/// Build the mollified kink sampled at `x_samples` (any finite reals; odd
/// extension covers negatives).
///
/// Inverts `x(s) = int_0^s du/sqrt(2 U_eps(u))` by cumulative
/// Gauss–Legendre quadrature with Newton refinement, cross-checked against
/// adaptive quadrature; continues with the exponential tail whose constant
/// is fitted at `1 - s = 1e-6`, where the potential has long been exactly
/// quadratic.
pub fn kink_mollified(model: &PotentialModel, x_samples: &[f64]) -> Result<KinkProfile> {
    if !matches!(model.kind, ModelKind::Mollified) {
        return Err(Error::domain(
            "kink_mollified needs a mollified model; use KinkProfile::exact for the exact kink",
        ));
    }
    for &x in x_samples {
        if !x.is_finite() {
            return Err(Error::domain(format!("non-finite sample abscissa {x}")));
        }
    }
    let p = model.params;
    let eps = model.epsilon;
    let m = p.m();
    let solver = KinkSolver::new(model);
    let x_sw = solver.x_switch();

    // independent adaptive check of the cumulative quadrature, split at the
    // blend-zone edges where smoothness degrades
    let f = |u: f64| 1.0 / (2.0 * model.value(u, 0)).sqrt();
    let x_sw_check = adaptive_simpson(&f, 0.0, p.gamma - eps, 1e-12)?
        + adaptive_simpson(&f, p.gamma - eps, p.gamma + eps, 1e-12)?;
    if (x_sw - x_sw_check).abs() > 1e-9 {
        return Err(Error::numerics(format!(
            "kink quadrature inconsistent: cumulative {x_sw} vs adaptive {x_sw_check}"
        )));
    }

    // continue the quadrature through the outer zone down to 1 - s = S_TAIL
    // and fit the tail constant at the last point
    let x_last = x_sw + adaptive_simpson(&f, p.gamma + eps, 1.0 - S_TAIL, 1e-12)?;
    let tail_c = S_TAIL * (m * x_last).exp();

    let x_blend_lo = solver.x_of_s(p.gamma - eps);

    let eval_at = |a: f64| -> (f64, f64) {
        if a >= x_sw {
            let s = 1.0 - tail_c * (-m * a).exp();
            (s, (2.0 * model.value(s, 0)).sqrt())
        } else {
            let s = solver.s_of_x(a);
            (s, (2.0 * model.value(s, 0)).sqrt())
        }
    };

    // requested samples, via odd extension
    let mut s_out = Vec::with_capacity(x_samples.len());
    let mut ds_out = Vec::with_capacity(x_samples.len());
    for &x in x_samples {
        let (s, ds) = eval_at(x.abs());
        s_out.push(if x < 0.0 { -s } else { s });
        ds_out.push(ds);
    }

    // interpolation backbone: nonnegative sample set plus the two anchors
    let mut xs: Vec<f64> = x_samples
        .iter()
        .map(|x| x.abs())
        .filter(|&a| a < x_sw)
        .chain([0.0, x_sw])
        .collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();
    let mut backbone = Backbone::default();
    for &a in &xs {
        let (s, ds) = eval_at(a);
        backbone.x.push(a);
        backbone.s.push(s);
        backbone.ds.push(ds);
    }

    Ok(KinkProfile {
        model: model.clone(),
        x: x_samples.to_vec(),
        s: s_out,
        ds: ds_out,
        tail_switch: x_sw,
        tail_c,
        x_blend_lo,
        backbone,
    })
}

/// Mollified kink on the default dense grid (step 0.005 out to past the
/// tail switch), suitable for all downstream consumers.
pub fn kink_mollified_default(model: &PotentialModel) -> Result<KinkProfile> {
    let probe = kink_mollified(model, &[0.0])?;
    let reach = probe.tail_switch + 0.5;
    let n = (reach / 0.005).ceil() as usize;
    let xs: Vec<f64> = (0..=n).map(|i| i as f64 * 0.005).collect();
    kink_mollified(model, &xs)
}

/// The kink matching a model's kind: closed form for the exact potential,
/// default-resolution profile for a mollified one.
pub fn kink_for(model: &PotentialModel) -> Result<KinkProfile> {
    match model.kind {
        ModelKind::Exact => Ok(KinkProfile::exact(model)),
        ModelKind::Mollified => kink_mollified_default(model),
    }
}
