//! Derived constants of the piecewise-parabolic double-well family and the
//! closed-form kink.
//!
//! The potential is built from three parabolic arcs glued C¹ at `psi = ±gamma`:
//! an inverted arc of curvature `b` in the middle and two wells of curvature
//! `d` centered at `psi = ±1`. Requiring the two vacua to sit at height zero
//! and the arcs to match fixes everything in terms of `gamma` alone:
//! `b = 1/gamma`, `d = 1/(1-gamma)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Derived constants of the family for one value of `gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaParams {
    /// Shape parameter: the matching height between the inner arc and the
    /// outer wells. Must lie in (0, 1).
    pub gamma: f64,
    /// Inner curvature, `b = 1/gamma`.
    pub b: f64,
    /// Outer curvature, `d = 1/(1-gamma)`. Equals `m²`, the square of the
    /// mass of small excitations around the vacua, and marks the edge of the
    /// continuous spectrum of the linearized operator.
    pub d: f64,
    /// Kink matching abscissa, `q = sqrt(gamma) * asin(sqrt(gamma))`: the
    /// kink spends `|x| <= q` on the inner arc.
    pub q: f64,
    /// Inner kink amplitude, `C = sqrt(gamma)`: `s(x) = C sin(sqrt(b) x)` for
    /// `|x| <= q`.
    #[serde(rename = "C")]
    pub c: f64,
    /// Outer kink coefficient, `A = (gamma-1) exp(sqrt(d) q)`, always
    /// negative: `s(x) = 1 + A exp(-sqrt(d) x)` for `x >= q`.
    #[serde(rename = "A")]
    pub a: f64,
    /// Radius of the circle in the spectral (xi, eta)-plane,
    /// `R = asin(sqrt(gamma)) / sqrt(1-gamma) = q sqrt(b+d)`.
    #[serde(rename = "R")]
    pub r: f64,
}

impl GammaParams {
    /// Mass of excitations around the vacua: `m = sqrt(d)`.
    pub fn m(&self) -> f64 {
        self.d.sqrt()
    }
}

/// Compute all derived constants for `gamma` in (0, 1).
pub fn derive_params(gamma: f64) -> Result<GammaParams> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::domain(format!(
            "gamma must lie in (0,1), got {gamma}"
        )));
    }
    let b = 1.0 / gamma;
    let d = 1.0 / (1.0 - gamma);
    let root = gamma.sqrt();
    let asr = root.asin();
    let q = root * asr;
    let a = (gamma - 1.0) * (d.sqrt() * q).exp();
    let r = asr / (1.0 - gamma).sqrt();
    Ok(GammaParams {
        gamma,
        b,
        d,
        q,
        c: root,
        a,
        r,
    })
}

/// Evaluate the exact kink `s(x)`: `C sin(sqrt(b) x)` for `|x| <= q`,
/// `1 + A exp(-sqrt(d) x)` beyond, extended as an odd function.
pub fn kink_exact(params: &GammaParams, x: f64) -> f64 {
    let ax = x.abs();
    let s = if ax <= params.q {
        params.c * (params.b.sqrt() * ax).sin()
    } else {
        1.0 + params.a * (-params.m() * ax).exp()
    };
    if x < 0.0 {
        -s
    } else {
        s
    }
}

/// Derivative of the exact kink. Continuous everywhere, including `±q`
/// where both branches give `sqrt(1-gamma)`.
pub fn kink_exact_deriv(params: &GammaParams, x: f64) -> f64 {
    let ax = x.abs();
    if ax <= params.q {
        (params.b.sqrt() * ax).cos()
    } else {
        -params.a * params.m() * (-params.m() * ax).exp()
    }
}
