//! Explicit time-domain simulator for the nonlinear wave equation
//! `psi_tt = psi_xx + F(psi)` with `F = -U'`: static, boosted, and perturbed
//! kinks under either the exact or a mollified potential.
//!
//! The scheme is kick-drift-kick leapfrog with a 3-point Laplacian and
//! Dirichlet ends pinned to the kink asymptotics -1/+1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kink::{kink_for, KinkProfile};
use crate::modes::Parity;
use crate::potential::PotentialModel;

/// A traveling-kink initial condition `s(kappa (x - q0))` with velocity `v`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BoostSpec {
    pub v: f64,
    pub q0: f64,
    /// Lorentz factor `1/sqrt(1-v^2)`; derived, so configs omit it and
    /// [`init_state`] recomputes it from `v`.
    #[serde(skip)]
    pub kappa: f64,
}

impl BoostSpec {
    pub fn new(v: f64, q0: f64) -> Result<Self> {
        if !(v.abs() < 1.0) {
            return Err(Error::domain(format!("boost velocity must satisfy |v| < 1; got {v}")));
        }
        Ok(BoostSpec {
            v,
            q0,
            kappa: 1.0 / (1.0 - v * v).sqrt(),
        })
    }
}

/// Initial data menu.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum Profile {
    /// the kink at rest
    Kink,
    /// moving kink
    Boosted(BoostSpec),
    /// kink plus a localized Gaussian bump of chosen parity (psi only)
    Perturbed {
        amplitude: f64,
        width: f64,
        parity: Parity,
    },
}

/// Field snapshot: `psi` and its velocity `pi` on a uniform grid.
#[derive(Clone, Debug)]
pub struct FieldState {
    pub x: Vec<f64>,
    pub psi: Vec<f64>,
    pub pi: Vec<f64>,
    pub t: f64,
    pub dx: f64,
    pub model: PotentialModel,
}

/// Restoring force `-U'(psi)`.  The clamp is a guard for large transients;
/// the outer potential branches are globally quadratic anyway, so it only
/// caps truly pathological overshoots.
fn force(model: &PotentialModel, psi: f64) -> f64 {
    if !psi.is_finite() {
        // leave the poisoned value for the post-step scan to report
        return 0.0;
    }
    -model.value(psi.clamp(-1.0 - 1e-6, 1.0 + 1e-6), 1)
}

/// Sample initial data on `[-L, L]`.  The grid must resolve the kink core:
/// the width `1/sqrt(d)` has to span at least 20 nodes.
pub fn init_state(model: &PotentialModel, profile: &Profile, l: f64, dx: f64) -> Result<FieldState> {
    let width = 1.0 / model.params.d.sqrt();
    if !(dx > 0.0) || 20.0 * dx > width {
        return Err(Error::domain(format!(
            "grid too coarse: kink width {width:.4} must span >= 20 nodes, need dx <= {:.5}",
            width / 20.0
        )));
    }
    let nhalf = (l / dx).round() as i64;
    if nhalf < 20 {
        return Err(Error::domain(format!("domain [-{l}, {l}] too small for dx={dx}")));
    }
    let kink = kink_for(model)?;
    let n = (2 * nhalf + 1) as usize;
    let x: Vec<f64> = (0..n).map(|i| (i as i64 - nhalf) as f64 * dx).collect();
    let mut psi = Vec::with_capacity(n);
    let mut pi = vec![0.0; n];
    match profile {
        Profile::Kink => {
            for &xi in &x {
                psi.push(kink.eval(xi));
            }
        }
        Profile::Boosted(spec) => {
            let b = BoostSpec::new(spec.v, spec.q0)?; // recompute kappa
            for (i, &xi) in x.iter().enumerate() {
                let u = b.kappa * (xi - b.q0);
                psi.push(kink.eval(u));
                pi[i] = -b.v * b.kappa * kink.eval_deriv(u);
            }
        }
        Profile::Perturbed {
            amplitude,
            width,
            parity,
        } => {
            if !(*width > 0.0) {
                return Err(Error::domain(format!("bump width must be positive; got {width}")));
            }
            for &xi in &x {
                let u = xi / width;
                let bump = match parity {
                    Parity::Symmetric => amplitude * (-0.5 * u * u).exp(),
                    Parity::Antisymmetric => amplitude * u * (-0.5 * u * u).exp(),
                };
                psi.push(kink.eval(xi) + bump);
            }
        }
    }
    // Dirichlet pinning to the asymptotic values
    psi[0] = -1.0;
    psi[n - 1] = 1.0;
    pi[0] = 0.0;
    pi[n - 1] = 0.0;
    Ok(FieldState {
        x,
        psi,
        pi,
        t: 0.0,
        dx,
        model: model.clone(),
    })
}

fn kick(state: &mut FieldState, hdt: f64) {
    let inv2 = 1.0 / (state.dx * state.dx);
    let n = state.psi.len();
    for i in 1..n - 1 {
        let lap = (state.psi[i - 1] - 2.0 * state.psi[i] + state.psi[i + 1]) * inv2;
        state.pi[i] += hdt * (lap + force(&state.model, state.psi[i]));
    }
}

/// One leapfrog update.  `dt` may be negative (exact time reversal); its
/// magnitude must respect the CFL bound `|dt| <= 0.5 dx`.
pub fn step(state: &mut FieldState, dt: f64) -> Result<()> {
    if dt.abs() > 0.5 * state.dx * (1.0 + 1e-12) {
        return Err(Error::domain(format!(
            "cfl violation: |dt| must not exceed 0.5 dx = {}; got {dt}",
            0.5 * state.dx
        )));
    }
    kick(state, 0.5 * dt);
    let n = state.psi.len();
    for i in 1..n - 1 {
        state.psi[i] += dt * state.pi[i];
    }
    kick(state, 0.5 * dt);
    state.t += dt;
    for i in 0..n {
        if !(state.psi[i].is_finite() && state.pi[i].is_finite()) {
            return Err(Error::numerics(format!(
                "field went non-finite at t={:.6} (node {i}, x={:.4})",
                state.t, state.x[i]
            )));
        }
    }
    Ok(())
}

/// Discrete energy `sum [pi^2/2 + (grad psi)^2/2 + U(psi)] dx`.
pub fn energy(state: &FieldState) -> f64 {
    let n = state.psi.len();
    let mut e = 0.0;
    for i in 0..n {
        e += 0.5 * state.pi[i] * state.pi[i] + state.model.value(state.psi[i], 0);
    }
    for i in 0..n - 1 {
        let g = (state.psi[i + 1] - state.psi[i]) / state.dx;
        e += 0.5 * g * g;
    }
    e * state.dx
}

/// Kink position: the unique zero crossing of `psi`, linearly interpolated.
pub fn track_center(state: &FieldState) -> Result<f64> {
    let n = state.psi.len();
    let mut centers = Vec::new();
    for i in 0..n - 1 {
        let (a, b) = (state.psi[i], state.psi[i + 1]);
        if a == 0.0 {
            // node exactly on the zero: count once, using the neighbors' signs
            if i > 0 && (state.psi[i - 1] < 0.0) != (b < 0.0) && b != 0.0 {
                centers.push(state.x[i]);
            }
        } else if a * b < 0.0 {
            centers.push(state.x[i] - a * state.dx / (b - a));
        }
    }
    match centers.len() {
        1 => Ok(centers[0]),
        k => Err(Error::domain(format!(
            "track_center expects exactly one zero crossing, found {k}"
        ))),
    }
}

/// Sup-norm deviation from the recentered kink over `|x| <= window`.
pub fn window_sup(state: &FieldState, kink: &KinkProfile, window: f64) -> Result<f64> {
    let c = track_center(state)?;
    let mut sup = 0.0f64;
    for (i, &x) in state.x.iter().enumerate() {
        if x.abs() <= window {
            sup = sup.max((state.psi[i] - kink.eval(x - c)).abs());
        }
    }
    Ok(sup)
}

/// Time series of the recentered window deviation for a recorded run.
/// Reported, not asserted: decay is an observation, boundedness the only
/// property tests rely on.
pub fn perturbation_diagnostics(run: &[FieldState], window: f64) -> Result<Vec<(f64, f64)>> {
    let Some(first) = run.first() else {
        return Ok(Vec::new());
    };
    let kink = kink_for(&first.model)?;
    run.iter()
        .map(|s| Ok((s.t, window_sup(s, &kink, window)?)))
        .collect()
}
