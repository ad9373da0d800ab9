//! The potential family: exact piecewise-parabolic members and their
//! mollified approximations.
//!
//! The exact member `U0` is two parabolic wells of curvature `d` at
//! `psi = ±1` glued C¹ to an inverted parabola of curvature `b` across
//! `|psi| <= gamma`. Mollification convolves `U0` with a scaled kernel and
//! subtracts the level shift `mu_eps` that restores `U(±1) = 0`:
//!
//! * `|psi| >= gamma + eps`: unchanged, `U_eps = U0` exactly;
//! * `|psi| <= gamma - eps`: `U_eps = U0 - mu_eps - nu_eps` (both shifts are
//!   `(curvature/2) eps^2 m2`);
//! * blend zone: closed form in the kernel's incomplete moments, tabulated
//!   on a uniform psi-grid and interpolated (cubic, 4-point Lagrange).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mollifier::{Kernel, Mollifier};
use crate::params::{derive_params, GammaParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Exact,
    Mollified,
}

/// Values of the mollified potential and its first three derivatives on a
/// uniform psi-grid covering `[-(gamma+2eps), gamma+2eps]`. Only the blend
/// zones `gamma-eps <= |psi| <= gamma+eps` are ever read back through
/// interpolation; everywhere else the branch formulas are exact.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlendTable {
    /// First grid node (= -(gamma + 2 eps)).
    pub psi0: f64,
    /// Grid step (<= the requested `grid_step`, adjusted to land exactly).
    pub step: f64,
    pub u: Vec<f64>,
    pub du: Vec<f64>,
    pub d2u: Vec<f64>,
    pub d3u: Vec<f64>,
}

impl BlendTable {
    /// Cubic (4-point Lagrange) interpolation of one column at `psi`.
    fn interp(&self, col: &[f64], psi: f64) -> f64 {
        let n = col.len();
        let t = (psi - self.psi0) / self.step;
        let i = (t.floor() as isize - 1).clamp(0, n as isize - 4) as usize;
        let x = t - i as f64; // local coordinate, nominally in [1, 2]
        let (a, b, c, d) = (col[i], col[i + 1], col[i + 2], col[i + 3]);
        let w0 = -(x - 1.0) * (x - 2.0) * (x - 3.0) / 6.0;
        let w1 = x * (x - 2.0) * (x - 3.0) / 2.0;
        let w2 = -x * (x - 1.0) * (x - 3.0) / 2.0;
        let w3 = x * (x - 1.0) * (x - 2.0) / 6.0;
        w0 * a + w1 * b + w2 * c + w3 * d
    }
}

/// An evaluatable potential: the exact piecewise member or a mollified one.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PotentialModel {
    pub kind: ModelKind,
    pub params: GammaParams,
    /// Mollification radius; 0 for the exact model.
    pub epsilon: f64,
    /// Outer level shift `(d/2) eps^2 m2` (0 for exact).
    pub mu_eps: f64,
    /// Inner level shift `(b/2) eps^2 m2` (0 for exact).
    pub nu_eps: f64,
    /// Measured `sup |U_eps - U0| / eps` over the table (0 for exact); the
    /// mollification error constant, reported rather than assumed.
    pub c_eps: f64,
    pub mollifier: Option<Mollifier>,
    pub table: Option<BlendTable>,
}

/// One potential evaluation. `distributional` marks the single non-classical
/// case: the third derivative of the exact model at `psi = ±gamma`, where the
/// true object is a pair of Dirac masses; the returned value is then 0 and
/// downstream coupling integrals handle the point masses in closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotEval {
    pub value: f64,
    pub distributional: bool,
}

impl PotentialModel {
    /// The exact piecewise-parabolic member.
    pub fn exact(params: GammaParams) -> PotentialModel {
        PotentialModel {
            kind: ModelKind::Exact,
            params,
            epsilon: 0.0,
            mu_eps: 0.0,
            nu_eps: 0.0,
            c_eps: 0.0,
            mollifier: None,
            table: None,
        }
    }

    /// Mollified member with the standard bump and the default table step
    /// `eps/64`.
    pub fn mollified_default(gamma: f64, epsilon: f64) -> Result<PotentialModel> {
        build_mollified(gamma, epsilon, Mollifier::StandardBump, epsilon / 64.0)
    }

    /// Evaluate `U`, `U'`, `U''`, or `U'''` at `psi`; see [`eval_potential`].
    pub fn eval(&self, psi: f64, order: u8) -> Result<PotEval> {
        eval_potential(self, psi, order)
    }

    /// Infallible value accessor for hot loops; `order` must be in 0..=3
    /// (asserted), and the distributional flag is dropped.
    pub fn value(&self, psi: f64, order: u8) -> f64 {
        self.eval(psi, order).expect("order in 0..=3").value
    }
}

fn exact_branch(p: &GammaParams, psi: f64, order: u8) -> PotEval {
    let a = psi.abs();
    let sign = if psi < 0.0 { -1.0 } else { 1.0 };
    let inner = a <= p.gamma;
    let value = match (order, inner) {
        (0, true) => 0.5 - 0.5 * p.b * psi * psi,
        (0, false) => 0.5 * p.d * (a - 1.0) * (a - 1.0),
        (1, true) => -p.b * psi,
        (1, false) => sign * p.d * (a - 1.0),
        (2, true) => -p.b,
        (2, false) => p.d,
        (3, _) => 0.0,
        _ => unreachable!(),
    };
    PotEval {
        value,
        distributional: order == 3 && a == p.gamma,
    }
}

fn mollified_eval(m: &PotentialModel, psi: f64, order: u8) -> PotEval {
    let p = &m.params;
    let a = psi.abs();
    let sign = if psi < 0.0 { -1.0 } else { 1.0 };
    let value = if a >= p.gamma + m.epsilon {
        // outer zone: untouched by the kernel, and the level shift is
        // exactly mu_eps, which the builder already subtracted
        match order {
            0 => 0.5 * p.d * (a - 1.0) * (a - 1.0),
            1 => sign * p.d * (a - 1.0),
            2 => p.d,
            _ => 0.0,
        }
    } else if a <= p.gamma - m.epsilon {
        match order {
            0 => 0.5 - 0.5 * p.b * psi * psi - m.mu_eps - m.nu_eps,
            1 => -p.b * psi,
            2 => -p.b,
            _ => 0.0,
        }
    } else {
        let t = m.table.as_ref().expect("mollified model carries a table");
        let col = match order {
            0 => &t.u,
            1 => &t.du,
            2 => &t.d2u,
            _ => &t.d3u,
        };
        // interpolate at |psi| so evenness holds exactly, not just to
        // interpolation roundoff
        let v = t.interp(col, a);
        if order % 2 == 1 {
            sign * v
        } else {
            v
        }
    };
    PotEval {
        value,
        distributional: false,
    }
}

/// Evaluate the potential or one of its first three derivatives.
///
/// The branch formulas are total in `psi` (the outer parabola extends
/// globally), so any real argument is accepted. For the exact model, order 3
/// is zero away from `psi = ±gamma` and distributional exactly there; see
/// [`PotEval`].
pub fn eval_potential(model: &PotentialModel, psi: f64, order: u8) -> Result<PotEval> {
    if order > 3 {
        return Err(Error::domain(format!("derivative order must be 0..=3, got {order}")));
    }
    if !psi.is_finite() {
        return Err(Error::domain(format!("psi must be finite, got {psi}")));
    }
    Ok(match model.kind {
        ModelKind::Exact => exact_branch(&model.params, psi, order),
        ModelKind::Mollified => mollified_eval(model, psi, order),
    })
}

/// Build a mollified member `U_eps`.
///
/// `grid_step` controls the resolution of the internal table (the effective
/// step is rounded down so nodes land exactly on `±(gamma+2eps)` and 0);
/// `eps/64` is the conventional choice. Requires
/// `0 < eps < min(gamma, 1-gamma)/2` so the blend zones stay clear of both
/// `psi = 0` and the vacua.
pub fn build_mollified(
    gamma: f64,
    epsilon: f64,
    mollifier: Mollifier,
    grid_step: f64,
) -> Result<PotentialModel> {
    let params = derive_params(gamma)?;
    let limit = 0.5 * gamma.min(1.0 - gamma);
    if !(epsilon > 0.0 && epsilon < limit) {
        return Err(Error::domain(format!(
            "epsilon must lie in (0, {limit:.6}) for gamma={gamma} (blend zones must not \
             touch psi=0 or psi=±1), got {epsilon}"
        )));
    }
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::domain(format!("grid_step must be positive, got {grid_step}")));
    }

    let kernel = Kernel::new(mollifier);
    let m2 = kernel.m2;
    let mu_eps = 0.5 * params.d * epsilon * epsilon * m2;
    let nu_eps = 0.5 * params.b * epsilon * epsilon * m2;

    // uniform symmetric grid with a node at 0 and at both ends
    let reach = gamma + 2.0 * epsilon;
    let half_n = (reach / grid_step).ceil() as usize;
    let step = reach / half_n as f64;
    let n = 2 * half_n + 1;

    // incomplete moments at the scaled coordinates of the nonnegative nodes
    let zs: Vec<f64> = (0..=half_n)
        .map(|i| (i as f64 * step - gamma) / epsilon)
        .collect();
    let moments = kernel.incomplete_moments(&zs);

    let mut u = vec![0.0; n];
    let mut du = vec![0.0; n];
    let mut d2u = vec![0.0; n];
    let mut d3u = vec![0.0; n];
    let bd = params.b + params.d;
    for i in 0..=half_n {
        let psi = i as f64 * step;
        let z = zs[i];
        let row = if z <= -1.0 {
            [
                0.5 - 0.5 * params.b * psi * psi - mu_eps - nu_eps,
                -params.b * psi,
                -params.b,
                0.0,
            ]
        } else if z >= 1.0 {
            [
                0.5 * params.d * (psi - 1.0) * (psi - 1.0),
                params.d * (psi - 1.0),
                params.d,
                0.0,
            ]
        } else {
            let [m0, m1, mm2] = moments[i];
            // convolution of the piecewise-quadratic against the kernel:
            // inner parabola plus the one-sided quadratic excess
            // (b+d)/2 (psi-gamma)_+^2 smeared into incomplete moments
            let j = z * z * m0 - 2.0 * z * m1 + mm2;
            let jp = 2.0 * (z * m0 - m1);
            [
                0.5 - 0.5 * params.b * psi * psi - mu_eps - nu_eps + 0.5 * bd * epsilon * epsilon * j,
                -params.b * psi + 0.5 * bd * epsilon * jp,
                -params.b + bd * m0,
                bd * kernel.h(z) / epsilon,
            ]
        };
        let hi = half_n + i;
        let lo = half_n - i;
        u[hi] = row[0];
        du[hi] = row[1];
        d2u[hi] = row[2];
        d3u[hi] = row[3];
        // even potential: mirror with odd-order sign flips
        u[lo] = row[0];
        du[lo] = -row[1];
        d2u[lo] = row[2];
        d3u[lo] = -row[3];
    }

    // measured mollification error constant: sup |U_eps - U0| / eps
    let mut sup = 0.0f64;
    for i in 0..=half_n {
        let psi = i as f64 * step;
        let u0 = exact_branch(&params, psi, 0).value;
        sup = sup.max((u[half_n + i] - u0).abs());
    }

    Ok(PotentialModel {
        kind: ModelKind::Mollified,
        params,
        epsilon,
        mu_eps,
        nu_eps,
        c_eps: sup / epsilon,
        mollifier: Some(mollifier),
        table: Some(BlendTable {
            psi0: -reach,
            step,
            u,
            du,
            d2u,
            d3u,
        }),
    })
}
