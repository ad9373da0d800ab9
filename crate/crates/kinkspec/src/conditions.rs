//! Certification of the spectral conditions for the exact potential.
//!
//! U1 is structural (quadratic wells), U2 excludes edge resonances, U3 places
//! the internal mode below the half-edge (`4 lambda_1 > d`), and U4 is the
//! nonvanishing of the Fermi-golden-rule coupling, reduced here to its
//! normalization-free obstruction `sin(beta~ q)` with `beta~ = sqrt(b + 4
//! lambda_1)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modes::{all_modes, gamma_k, lambda1_xi, EigenMode};
use crate::params::{derive_params, GammaParams};
use crate::roots::bisect;

/// Schema tag stamped into serialized spectral reports.
pub const REPORT_SCHEMA: &str = "kinkspec/spectral-report/v1";

/// An analytic FGR value this close to zero counts as vanishing (U4 fails).
pub const FGR_TOL: f64 = 1e-6;

/// Smoothness condition; the wells are exactly quadratic beyond the corners,
/// so every differentiability order holds at once.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct U1Report {
    pub holds: bool,
    #[serde(rename = "K_note")]
    pub k_note: String,
}

/// Resonance exclusion: distance from gamma to the nearest resonance
/// parameter must exceed the tolerance.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct U2Report {
    pub holds: bool,
    pub nearest_k: u32,
    pub nearest_gamma_k: f64,
    pub distance: f64,
}

/// Internal-mode placement: `4 lambda_1 > d`, tested both as the direct
/// ratio and in the equivalent trigonometric form `4 cos^2 xi < 3 gamma`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct U3Report {
    pub holds: bool,
    pub lambda1: f64,
    pub ratio: f64,
    pub test_value: f64,
}

/// Fermi-golden-rule nonvanishing.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct U4Report {
    pub holds: bool,
    pub fgr_value: f64,
    pub distance_to_gamma_star: f64,
}

/// Numeric context for a report produced from a mollified model.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct MollifiedDiagnostics {
    /// internal-mode eigenvalue of the smoothed operator
    pub lambda1_eps: f64,
    /// support pad of the smoothed linearized potential
    pub delta: f64,
    /// L2 norm of the potential difference w_eps
    pub w_norm: f64,
}

/// Where the certified numbers came from.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Exact,
    Mollified {
        epsilon: f64,
        diagnostics: MollifiedDiagnostics,
    },
}

/// Full certificate for one gamma: parameters, discrete spectrum, and the
/// four condition checks.  U3/U4 are `None` outside `(gamma_1, gamma_2)`
/// where the internal mode they presuppose does not exist (or is not unique).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralReport {
    pub schema: String,
    pub gamma: f64,
    pub params: GammaParams,
    pub modes: Vec<EigenMode>,
    pub u1: U1Report,
    pub u2: U2Report,
    pub u3: Option<U3Report>,
    pub u4: Option<U4Report>,
    pub provenance: Provenance,
}

/// Distance from gamma to the resonance set `{gamma_k}`.
pub fn check_u2(p: &GammaParams, tol: f64) -> U2Report {
    // R is increasing in gamma, so the nearest resonance index is near 2R/pi
    let guess = (2.0 * p.r / PI).round().max(1.0) as u32;
    let mut best: Option<(u32, f64, f64)> = None;
    for k in guess.saturating_sub(1).max(1)..=guess + 1 {
        let gk = gamma_k(k).expect("resonance parameter");
        let d = (p.gamma - gk).abs();
        if best.is_none_or(|(_, _, bd)| d < bd) {
            best = Some((k, gk, d));
        }
    }
    let (nearest_k, nearest_gamma_k, distance) = best.unwrap();
    U2Report {
        holds: distance > tol,
        nearest_k,
        nearest_gamma_k,
        distance,
    }
}

fn require_u34_window(gamma: f64, what: &str) -> Result<()> {
    let g1 = gamma_k(1)?;
    let g2 = gamma_k(2)?;
    if gamma > g1 && gamma < g2 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{what} requires gamma in ({g1:.10}, {g2:.10}); got {gamma}"
        )))
    }
}

/// Internal-mode placement check on `(gamma_1, gamma_2)`.
pub fn check_u3(p: &GammaParams) -> Result<U3Report> {
    require_u34_window(p.gamma, "check_u3")?;
    let (xi, lam) = lambda1_xi(p)?;
    let test_value = 4.0 * xi.cos().powi(2);
    let ratio = 4.0 * lam / p.d;
    let holds = test_value < 3.0 * p.gamma;
    if holds != (ratio > 1.0) {
        return Err(Error::numerics(format!(
            "equivalent u3 tests disagree at gamma={}: 4cos^2 xi = {test_value}, 4 lambda1/d = {ratio}",
            p.gamma
        )));
    }
    Ok(U3Report {
        holds,
        lambda1: lam,
        ratio,
        test_value,
    })
}

/// The critical gamma below which `4 cos^2 xi < 3 gamma` could fail: root of
/// `R(a) = 2(pi - arccos(sqrt(3a)/2))/sqrt(4 - 3a)`.  It sits above gamma_2,
/// which is why U3 holds on the whole window.
pub fn solve_u3_bound() -> Result<f64> {
    let f = |a: f64| {
        let r = a.sqrt().asin() / (1.0 - a).sqrt();
        r - 2.0 * (PI - ((3.0 * a).sqrt() / 2.0).acos()) / (4.0 - 3.0 * a).sqrt()
    };
    let root = bisect(f, 0.6, 0.99)?;
    let g2 = gamma_k(2)?;
    if root <= g2 {
        return Err(Error::numerics(format!(
            "u3 bound root {root} not above gamma_2 = {g2}"
        )));
    }
    Ok(root)
}

/// Normalization-free FGR obstruction `sin(beta~ q)`; U4 holds iff nonzero.
pub fn fgr_value_analytic(p: &GammaParams) -> Result<f64> {
    require_u34_window(p.gamma, "fgr_value_analytic")?;
    let (_, lam) = lambda1_xi(p)?;
    Ok(((p.b + 4.0 * lam).sqrt() * p.q).sin())
}

/// Where the FGR zero lives, with the bracketing diagnostics of the
/// `(xi, theta)` reduction evaluated at `xi(gamma_2)`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct GammaStarDiagnostics {
    pub gamma_star: f64,
    pub xi_star: f64,
    pub theta_star: f64,
    pub xi_gamma2: f64,
    pub theta1_at_xi_gamma2: f64,
    pub theta2_at_xi_gamma2: f64,
}

// the two theta branches of the reduced system: theta1 from
// 4 xi^2 - 3 theta^2 = pi^2, theta2 from sin xi/xi = cos theta/theta
fn theta1(xi: f64) -> f64 {
    ((4.0 * xi * xi - PI * PI) / 3.0).sqrt()
}

fn theta2(xi: f64) -> Result<f64> {
    let t = xi.sin() / xi;
    bisect(|th: f64| th.cos() / th - t, 1e-9, 0.5 * PI - 1e-12)
}

/// Solve the coupled system `{4 xi^2 - 3 theta^2 = pi^2, sin xi/xi =
/// cos theta/theta}` on `xi in (pi/2, xi(gamma_2))` and recover
/// `gamma_star = sin^2 theta`, the unique zero of the analytic FGR value.
pub fn gamma_star_diagnostics() -> Result<GammaStarDiagnostics> {
    let g2 = gamma_k(2)?;
    let (xi_g2, _) = lambda1_xi(&derive_params(g2)?)?;
    let h = |xi: f64| {
        let th = theta1(xi);
        xi.sin() / xi - th.cos() / th
    };
    let xi_star = bisect(h, 0.5 * PI * (1.0 + 1e-9), xi_g2)?;
    let th_star = theta1(xi_star);
    Ok(GammaStarDiagnostics {
        gamma_star: th_star.sin().powi(2),
        xi_star,
        theta_star: th_star,
        xi_gamma2: xi_g2,
        theta1_at_xi_gamma2: theta1(xi_g2),
        theta2_at_xi_gamma2: theta2(xi_g2)?,
    })
}

/// The gamma at which the analytic FGR value vanishes.
pub fn solve_gamma_star() -> Result<f64> {
    Ok(gamma_star_diagnostics()?.gamma_star)
}

/// Aggregate certificate for the exact potential at one gamma.  Failed
/// conditions are reported, not raised; only gamma outside `(0,1)` errors.
pub fn certify(gamma: f64, tol_resonance: f64) -> Result<SpectralReport> {
    let params = derive_params(gamma)?;
    let modes = all_modes(&params);
    let u1 = U1Report {
        holds: true,
        k_note: "K = \u{221e} (exact quadratic wells)".to_string(),
    };
    let u2 = check_u2(&params, tol_resonance);
    let (u3, u4) = match check_u3(&params) {
        Ok(r3) => {
            let fgr = fgr_value_analytic(&params)?;
            let gs = solve_gamma_star()?;
            let u4 = U4Report {
                holds: fgr.abs() > FGR_TOL,
                fgr_value: fgr,
                distance_to_gamma_star: (gamma - gs).abs(),
            };
            (Some(r3), Some(u4))
        }
        Err(Error::Domain(_)) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(SpectralReport {
        schema: REPORT_SCHEMA.to_string(),
        gamma,
        params,
        modes,
        u1,
        u2,
        u3,
        u4,
        provenance: Provenance::Exact,
    })
}
