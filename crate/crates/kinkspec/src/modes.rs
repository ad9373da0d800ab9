//! Discrete spectrum of the linearized operator about the exact kink.
//!
//! Inside `|x| <= q` the linearized potential is the constant `-b`, outside it
//! is `d`, so bound states are trigonometric pieces matched to exponential
//! tails.  Matching reduces to intersecting the circle `xi^2 + eta^2 = R^2`
//! with `-eta = xi cot xi` (odd modes) or `eta = xi tan xi` (even modes),
//! where `xi = beta q` and `eta = alpha q`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::GammaParams;
use crate::roots::bisect;

/// Below this `eta` a circle intersection is an edge resonance (bounded,
/// non-decaying solution at the continuum edge), not a bound state, and is
/// excluded from mode lists.
pub const ETA_EDGE: f64 = 1e-9;

/// Mode parity under `x -> -x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Antisymmetric,
    Symmetric,
}

/// One bound state of the linearized operator, with unit L² normalization.
///
/// The interior amplitude `coefB` multiplies `sin(beta x)` or `cos(beta x)`,
/// the exterior amplitude `coefA` multiplies `e^(-alpha |x|)` (times `sgn x`
/// for odd modes); they match through `coefA e^(-eta) = coefB sin xi` (odd)
/// or `coefB cos xi` (even).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct EigenMode {
    pub lambda: f64,
    pub parity: Parity,
    pub xi: f64,
    pub eta: f64,
    pub alpha: f64,
    pub beta: f64,
    #[serde(rename = "coefA")]
    pub coef_a: f64,
    #[serde(rename = "coefB")]
    pub coef_b: f64,
}

fn eta_on_circle(r: f64, xi: f64) -> f64 {
    ((r - xi) * (r + xi)).max(0.0).sqrt()
}

fn mode_from_xi(p: &GammaParams, xi: f64, parity: Parity) -> EigenMode {
    let eta = eta_on_circle(p.r, xi);
    let beta = xi / p.q;
    let alpha = eta / p.q;
    let lambda = beta * beta - p.b;
    let (s, pm) = match parity {
        Parity::Antisymmetric => (xi.sin(), -1.0),
        Parity::Symmetric => (xi.cos(), 1.0),
    };
    // closed-form L2 norm: interior sin^2/cos^2 integral plus exponential tail
    let n2 = p.q * (1.0 + pm * (2.0 * xi).sin() / (2.0 * xi) + s * s / eta);
    let coef_b = 1.0 / n2.sqrt();
    let coef_a = coef_b * s * eta.exp();
    EigenMode {
        lambda,
        parity,
        xi,
        eta,
        alpha,
        beta,
        coef_a,
        coef_b,
    }
}

/// All odd bound states: solutions of `{-eta = xi cot xi, xi^2 + eta^2 = R^2}`
/// with `eta > 0`, one bisection bracket per branch `xi` in `((k-1/2)pi, k pi)`.
/// The list is empty for `R <= pi/2`.
pub fn antisym_modes(p: &GammaParams) -> Vec<EigenMode> {
    let r = p.r;
    let mut out = Vec::new();
    let mut k = 1u32;
    loop {
        let lo = (k as f64 - 0.5) * PI;
        if lo >= r {
            break;
        }
        let hi = (k as f64 * PI).min(r);
        // pole-free form of -eta = xi cot xi on the branch
        let f = |xi: f64| xi * xi.cos() + eta_on_circle(r, xi) * xi.sin();
        let xi = bisect(f, lo, hi).expect("antisymmetric branch root");
        if eta_on_circle(r, xi) > ETA_EDGE {
            out.push(mode_from_xi(p, xi, Parity::Antisymmetric));
        }
        k += 1;
    }
    out
}

/// All even bound states: solutions of `{eta = xi tan xi, xi^2 + eta^2 = R^2}`
/// with `eta > 0`, one bracket per branch `xi` in `(k pi, (k+1/2) pi)`.  The
/// branch `k = 0` always contains `xi = arcsin sqrt(gamma)`, i.e. the
/// groundstate `lambda = 0` with eigenfunction proportional to the kink slope.
pub fn sym_modes(p: &GammaParams) -> Vec<EigenMode> {
    let r = p.r;
    let mut out = Vec::new();
    let mut k = 0u32;
    loop {
        let lo = k as f64 * PI;
        if lo >= r {
            break;
        }
        let hi = ((k as f64 + 0.5) * PI).min(r);
        let f = |xi: f64| xi * xi.sin() - eta_on_circle(r, xi) * xi.cos();
        let xi = bisect(f, lo, hi).expect("symmetric branch root");
        if eta_on_circle(r, xi) > ETA_EDGE {
            out.push(mode_from_xi(p, xi, Parity::Symmetric));
        }
        k += 1;
    }
    out
}

/// Both parities merged and sorted by eigenvalue.
pub fn all_modes(p: &GammaParams) -> Vec<EigenMode> {
    let mut out = sym_modes(p);
    out.extend(antisym_modes(p));
    out.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    out
}

/// The k-th resonance parameter: the unique root of `R(gamma) = k pi/2`.
/// At these gamma a circle intersection sits exactly on the continuum edge
/// (`eta = 0`), so the matched solution is bounded but non-decaying.
pub fn gamma_k(k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::domain("gamma_k requires k >= 1"));
    }
    let target = 0.5 * k as f64 * PI;
    let f = |g: f64| (g.sqrt().asin() / (1.0 - g).sqrt()) - target;
    bisect(f, 1e-12, 1.0 - 1e-12)
}

/// Internal mode root as (xi, lambda); gamma must lie in (gamma_1, gamma_3]
/// so that exactly one odd bound state exists.
pub(crate) fn lambda1_xi(p: &GammaParams) -> Result<(f64, f64)> {
    let g1 = gamma_k(1)?;
    let g3 = gamma_k(3)?;
    if !(p.gamma > g1 && p.gamma <= g3) {
        return Err(Error::domain(format!(
            "lambda1 requires gamma in ({g1:.10}, {g3:.10}]; got {}",
            p.gamma
        )));
    }
    // xi/sin xi = R on (pi/2, pi); monotone since 1 - R cos xi > 0 there
    let f = |xi: f64| xi - p.r * xi.sin();
    let xi = bisect(f, 0.5 * PI, PI)?;
    let s = xi.sin();
    let lam = (s * s / (1.0 - p.gamma) - 1.0) / p.gamma;
    Ok((xi, lam))
}

/// First excited eigenvalue (the internal mode), via the scalar reduction
/// `xi = R sin xi` of the odd matching system.
pub fn lambda1(p: &GammaParams) -> Result<f64> {
    Ok(lambda1_xi(p)?.1)
}

/// Pointwise eigenfunction value for a mode produced from `params`.
pub fn eigenfunction_eval(mode: &EigenMode, p: &GammaParams, x: f64) -> f64 {
    let ax = x.abs();
    if ax <= p.q {
        match mode.parity {
            Parity::Antisymmetric => mode.coef_b * (mode.beta * x).sin(),
            Parity::Symmetric => mode.coef_b * (mode.beta * x).cos(),
        }
    } else {
        let tail = mode.coef_a * (-mode.alpha * ax).exp();
        match mode.parity {
            Parity::Antisymmetric => tail * x.signum(),
            Parity::Symmetric => tail,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{derive_params, kink_exact_deriv};
    use crate::quad::gl20_cells;

    #[test]
    fn antisym_empty_below_first_resonance() {
        for g in [0.3, 0.5, 0.6, 0.64] {
            let p = derive_params(g).unwrap();
            assert!(
                antisym_modes(&p).is_empty(),
                "unexpected odd mode at gamma={g}"
            );
        }
    }

    #[test]
    fn internal_mode_at_075() {
        // frozen root of xi = R sin xi with R = 2pi/3
        let p = derive_params(0.75).unwrap();
        let modes = antisym_modes(&p);
        assert!(modes.len() == 1, "count {}", modes.len());
        let m = &modes[0];
        assert!((m.xi - 1.9475230774263056).abs() < 1e-12, "xi {}", m.xi);
        assert!(
            (m.lambda - 3.2782145864873137).abs() < 1e-11,
            "lambda {}",
            m.lambda
        );
    }

    #[test]
    fn groundstate_always_present() {
        for i in 1..19 {
            let g = i as f64 * 0.05;
            let p = derive_params(g).unwrap();
            let modes = sym_modes(&p);
            let m = &modes[0];
            assert!(m.lambda.abs() < 1e-10, "lambda0 {} at gamma={g}", m.lambda);
            let xi0 = g.sqrt().asin();
            assert!((m.xi - xi0).abs() < 1e-11, "xi0 {} at gamma={g}", m.xi);
        }
    }

    #[test]
    fn circle_and_parity_residuals() {
        for i in 1..96 {
            let g = i as f64 * 0.01;
            let p = derive_params(g).unwrap();
            for m in all_modes(&p) {
                let circ = (m.xi * m.xi + m.eta * m.eta - p.r * p.r).abs();
                assert!(circ < 1e-12, "circle residual {circ:.2e} at gamma={g}");
                let rel = match m.parity {
                    Parity::Antisymmetric => m.xi * m.xi.cos() + m.eta * m.xi.sin(),
                    Parity::Symmetric => m.xi * m.xi.sin() - m.eta * m.xi.cos(),
                };
                assert!(
                    rel.abs() < 1e-12,
                    "parity residual {rel:.2e} at gamma={g}"
                );
                assert!(m.lambda > -1e-10 && m.lambda < p.d, "lambda {}", m.lambda);
            }
        }
    }

    #[test]
    fn mode_count_staircase() {
        // counts must step up by one exactly at each resonance parameter
        let cases = [(0.50, 1), (0.75, 2), (0.90, 3), (0.94, 4), (0.963, 5)];
        for (g, n) in cases {
            let p = derive_params(g).unwrap();
            let total = antisym_modes(&p).len() + sym_modes(&p).len();
            assert!(total == n, "count {total} at gamma={g}, want {n}");
        }
        // fine scan against the closed-form staircase in R
        for i in 1..=960 {
            let g = i as f64 * 0.001;
            let p = derive_params(g).unwrap();
            let na = antisym_modes(&p).len();
            let ns = sym_modes(&p).len();
            let want_a = (p.r / PI + 0.5).floor() as usize;
            let want_s = (p.r / PI).floor() as usize + 1;
            assert!(na == want_a, "odd count {na} at gamma={g}, want {want_a}");
            assert!(ns == want_s, "even count {ns} at gamma={g}, want {want_s}");
        }
    }

    #[test]
    fn resonance_parameters_match_table() {
        let table = [0.64643, 0.8579, 0.92472, 0.95359, 0.96856];
        for (i, want) in table.iter().enumerate() {
            let g = gamma_k(i as u32 + 1).unwrap();
            assert!((g - want).abs() < 1e-4, "gamma_{} = {g}", i + 1);
            let resid = g.sqrt().asin() / (1.0 - g).sqrt() - (i as f64 + 1.0) * 0.5 * PI;
            assert!(resid.abs() < 1e-12, "residual {resid:.2e} at k={}", i + 1);
        }
        assert!((gamma_k(1).unwrap() - 0.6464369927520271).abs() < 1e-12);
        assert!(gamma_k(0).is_err());
    }

    #[test]
    fn resonance_parameters_asymptotics() {
        // with s = sqrt(1 - gamma), the defining equation reads
        // arccos(s)/s = k pi/2; expanding arccos(s) = pi/2 - s + O(s^3)
        // gives s = pi/(2 + k pi), i.e. 1 - gamma_k ~ pi^2/(2 + k pi)^2
        let mut prev = 0.0;
        for k in 1..=20 {
            let g = gamma_k(k).unwrap();
            assert!(g > prev, "not increasing at k={k}");
            prev = g;
        }
        let g40 = gamma_k(40).unwrap();
        let t = PI * PI / (2.0 + 40.0 * PI).powi(2);
        assert!(
            ((1.0 - g40) - t).abs() < 1e-3 * t,
            "1-gamma_40 = {:.6e} vs asymptotic {t:.6e}",
            1.0 - g40
        );
    }

    #[test]
    fn internal_mode_frozen_values() {
        let cases = [
            (0.70, 1.7728005304379604, 3.1416491699456504),
            (0.75, 1.9475230774263056, 3.2782145864873137),
            (0.80, 2.1163251941359076, 3.3173352884307522),
            (0.85, 2.286239383907821, 3.2919772750254316),
        ];
        for (g, xi, lam) in cases {
            let p = derive_params(g).unwrap();
            let (x, l) = lambda1_xi(&p).unwrap();
            assert!((x - xi).abs() < 1e-12, "xi {x} at gamma={g}");
            assert!((l - lam).abs() < 1e-11, "lambda1 {l} at gamma={g}");
            assert!(l > 0.0 && l < p.d, "range at gamma={g}");
        }
    }

    #[test]
    fn internal_mode_agrees_with_branch_solver() {
        for i in 0..40 {
            let g = 0.65 + i as f64 * 0.0069;
            let p = derive_params(g).unwrap();
            let lam = match lambda1(&p) {
                Ok(l) => l,
                Err(_) => continue, // below gamma_1 on the first points
            };
            let modes = antisym_modes(&p);
            let d = (modes[0].lambda - lam).abs();
            assert!(d < 1e-12, "mismatch {d:.2e} at gamma={g}");
            // the two closed forms for lambda agree
            let alt = modes[0].xi.powi(2) / (p.q * p.q) - p.b;
            assert!((alt - lam).abs() < 1e-11, "forms differ at gamma={g}");
        }
    }

    #[test]
    fn internal_mode_domain_errors() {
        for g in [0.05, 0.5, 0.6464, 0.93, 0.99] {
            let p = derive_params(g).unwrap();
            let e = lambda1(&p).unwrap_err().to_string();
            assert!(e.contains("requires gamma in ("), "got {e}");
        }
        // right endpoint gamma_3 itself is included
        let g3 = gamma_k(3).unwrap();
        assert!(lambda1(&derive_params(g3 - 1e-12).unwrap()).is_ok());
    }

    #[test]
    fn internal_mode_is_continuous() {
        let g1 = gamma_k(1).unwrap();
        let g3 = gamma_k(3).unwrap();
        let n = 300;
        let mut prev = None;
        for i in 1..=n {
            let g = g1 + (g3 - g1) * i as f64 / n as f64;
            let lam = lambda1(&derive_params(g).unwrap()).unwrap();
            if let Some(p) = prev {
                let jump = (lam - p as f64).abs();
                assert!(jump < 0.5, "jump {jump} at gamma={g}");
            }
            prev = Some(lam);
        }
    }

    #[test]
    fn eigenfunction_matching_and_parity() {
        let p = derive_params(0.9).unwrap();
        for m in all_modes(&p) {
            let inner = eigenfunction_eval(&m, &p, p.q);
            let outer = m.coef_a * (-m.eta).exp();
            assert!((inner - outer).abs() < 1e-12, "value mismatch at q");
            // one-sided slopes from the closed forms
            let din = match m.parity {
                Parity::Antisymmetric => m.coef_b * m.beta * m.xi.cos(),
                Parity::Symmetric => -m.coef_b * m.beta * m.xi.sin(),
            };
            let dout = -m.alpha * outer;
            assert!((din - dout).abs() < 1e-12, "slope mismatch at q");
            if m.parity == Parity::Antisymmetric {
                assert!(eigenfunction_eval(&m, &p, 0.0) == 0.0);
                assert!(
                    (eigenfunction_eval(&m, &p, 0.3) + eigenfunction_eval(&m, &p, -0.3)).abs()
                        < 1e-15
                );
            } else {
                assert!(
                    (eigenfunction_eval(&m, &p, 0.3) - eigenfunction_eval(&m, &p, -0.3)).abs()
                        < 1e-15
                );
            }
            // exponential envelope beyond the well
            for i in 0..20 {
                let x = p.q + 0.1 + i as f64 * 0.3;
                let w = eigenfunction_eval(&m, &p, x).abs();
                assert!(w <= m.coef_a.abs() * (-m.alpha * x).exp() * (1.0 + 1e-14));
            }
        }
    }

    #[test]
    fn eigenfunctions_have_unit_norm() {
        for g in [0.3, 0.75, 0.9, 0.963] {
            let p = derive_params(g).unwrap();
            for m in all_modes(&p) {
                let inner = gl20_cells(&|x: f64| eigenfunction_eval(&m, &p, x).powi(2), 0.0, p.q, 64);
                let tail = m.coef_a * m.coef_a * (-2.0 * m.eta).exp() / (2.0 * m.alpha);
                let n2 = 2.0 * (inner + tail);
                assert!((n2 - 1.0).abs() < 1e-10, "norm^2 {n2} at gamma={g}");
            }
        }
    }

    #[test]
    fn groundstate_is_kink_slope() {
        let p = derive_params(0.75).unwrap();
        let m = sym_modes(&p)[0];
        let base = eigenfunction_eval(&m, &p, 0.0) / kink_exact_deriv(&p, 0.0);
        for i in 0..60 {
            let x = -3.0 + i as f64 * 0.1;
            let ratio = eigenfunction_eval(&m, &p, x) / kink_exact_deriv(&p, x);
            assert!(
                (ratio - base).abs() < 1e-10 * base.abs(),
                "ratio drift at x={x}"
            );
        }
    }
}
