//! Independent numerics for the linearized operator `H = -d^2/dx^2 + W(x)`:
//! a jump-aligned finite-difference discretization with Sturm-sequence
//! eigenvalue extraction, an edge-resonance indicator, continuum solutions,
//! shooting eigenvalues for mollified operators, the numeric
//! Fermi-golden-rule integral, and the mollification convergence study.
//!
//! Nothing here reuses the transcendental solutions from [`crate::modes`];
//! agreement between the two routes is the point.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kink::KinkProfile;
use crate::linearized::LinearizedPotential;
use crate::modes::{gamma_k, lambda1};
use crate::potential::{ModelKind, PotentialModel};
use crate::quad::gl20_cells;
use crate::roots::bisect;

/// One fourth-order step of `y' = f(x, y)`; `h` may be negative.
fn rk4_step<const M: usize>(
    f: &impl Fn(f64, &[f64; M]) -> [f64; M],
    x: f64,
    h: f64,
    y: &mut [f64; M],
) {
    let k1 = f(x, y);
    let mut t = *y;
    for j in 0..M {
        t[j] = y[j] + 0.5 * h * k1[j];
    }
    let k2 = f(x + 0.5 * h, &t);
    for j in 0..M {
        t[j] = y[j] + 0.5 * h * k2[j];
    }
    let k3 = f(x + 0.5 * h, &t);
    for j in 0..M {
        t[j] = y[j] + h * k3[j];
    }
    let k4 = f(x + h, &t);
    for j in 0..M {
        y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
}

/// Integrate `u'' = (W - lam) u` across `[a, b]`, evaluating W only at
/// coordinates clamped strictly inside the segment.  The clamp keeps
/// stage evaluations at a breakpoint from picking up the neighboring
/// branch of a piecewise potential.
fn advance_mode(w: &dyn Fn(f64) -> f64, lam: f64, a: f64, b: f64, step: f64, y: &mut [f64; 2]) {
    let n = ((b - a).abs() / step).ceil().max(1.0) as usize;
    let h = (b - a) / n as f64;
    let nudge = 1e-12;
    let f = |x: f64, s: &[f64; 2]| {
        let xx = x.clamp(a.min(b) + nudge, a.max(b) - nudge);
        [s[1], (w(xx) - lam) * s[0]]
    };
    for i in 0..n {
        rk4_step(&f, a + i as f64 * h, h, y);
    }
}

/// Symmetric tridiagonal discretization of `-d^2/dx^2 + W(x)` with Dirichlet
/// ends, on a staggered grid with the jumps `x = +-q` midway between nodes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiscreteOperator {
    /// half-width actually used (after alignment)
    pub l: f64,
    /// grid step actually used (after alignment)
    pub h: f64,
    /// interior point count
    pub n: usize,
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
    /// continuum threshold d
    pub edge: f64,
    /// set when the requested (L, h) had to be adjusted for alignment
    pub note: Option<String>,
}

impl DiscreteOperator {
    /// Assemble from an arbitrary even sampler; `q` fixes the alignment.
    pub fn assemble(l_req: f64, h_req: f64, q: f64, edge: f64, w: &dyn Fn(f64) -> f64) -> Self {
        let k = (q / h_req).round().max(1.0);
        let h = q / k;
        let nhalf = (l_req / h_req).round().max(1.0) as usize;
        let l = nhalf as f64 * h;
        let n = 2 * nhalf;
        let inv_h2 = 1.0 / (h * h);
        let mut diag = Vec::with_capacity(n);
        for i in 0..n {
            // nodes at -L + (i + 1/2) h keep |x +- q| >= h/2
            let x = -l + (i as f64 + 0.5) * h;
            diag.push(2.0 * inv_h2 + w(x));
        }
        let offdiag = vec![-inv_h2; n - 1];
        let note = if (h - h_req).abs() > 1e-12 * h_req || (l - l_req).abs() > 1e-12 * l_req {
            Some(format!(
                "grid adjusted for jump alignment: h={h:.12e}, L={l:.12e}"
            ))
        } else {
            None
        };
        DiscreteOperator {
            l,
            h,
            n,
            diag,
            offdiag,
            edge,
            note,
        }
    }

    /// Number of eigenvalues strictly below `lam` (Sturm sequence / LDL^T
    /// pivot count).
    pub fn count_below(&self, lam: f64) -> usize {
        let mut cnt = 0;
        let mut d = 1.0;
        for i in 0..self.n {
            let off2 = if i == 0 {
                0.0
            } else {
                self.offdiag[i - 1] * self.offdiag[i - 1]
            };
            d = self.diag[i] - lam - off2 / d;
            if d == 0.0 {
                d = -1e-300;
            }
            if d < 0.0 {
                cnt += 1;
            }
        }
        cnt
    }

    /// Eigenvector for an eigenvalue known to ~1e-10, by inverse iteration
    /// with the nearly singular shift; normalized to unit Euclidean norm.
    pub fn eigenvector(&self, lam: f64) -> Vec<f64> {
        let n = self.n;
        let mut v = vec![1.0; n];
        for _ in 0..2 {
            // Thomas sweep with regularized pivots; growth of the nearly
            // singular solve is exactly the eigen-direction we want
            let mut c = vec![0.0; n];
            let mut g = vec![0.0; n];
            let mut den = self.diag[0] - lam;
            if den.abs() < 1e-300 {
                den = 1e-300;
            }
            c[0] = self.offdiag[0] / den;
            g[0] = v[0] / den;
            for i in 1..n {
                let a = self.offdiag[i - 1];
                let mut piv = self.diag[i] - lam - a * c[i - 1];
                if piv.abs() < 1e-300 {
                    piv = 1e-300;
                }
                if i + 1 < n {
                    c[i] = self.offdiag[i] / piv;
                }
                g[i] = (v[i] - a * g[i - 1]) / piv;
            }
            v[n - 1] = g[n - 1];
            for i in (0..n - 1).rev() {
                v[i] = g[i] - c[i] * v[i + 1];
            }
            let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            for x in v.iter_mut() {
                *x /= scale;
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in v.iter_mut() {
            *x /= norm;
        }
        v
    }

    /// Node coordinates matching `diag`.
    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| -self.l + (i as f64 + 0.5) * self.h)
            .collect()
    }
}

/// Discretize a linearized potential on `[-L, L]`.  Requires `L > 4q` and
/// `h <= 0.01`; the grid is auto-adjusted for jump alignment (see the
/// operator's `note`).
pub fn discretize(w: &LinearizedPotential, l: f64, h: f64) -> Result<DiscreteOperator> {
    let q = w.jump_locus;
    if !(l > 4.0 * q) {
        return Err(Error::domain(format!(
            "discretize needs L > 4q = {}; got L={l}",
            4.0 * q
        )));
    }
    if !(h > 0.0 && h <= 0.01) {
        return Err(Error::domain(format!(
            "discretize needs 0 < h <= 0.01; got h={h}"
        )));
    }
    Ok(DiscreteOperator::assemble(l, h, q, w.edge, &|x| w.eval(x)))
}

/// All eigenvalues below `edge - 10h`, each bisected to 1e-10.
pub fn eigs_below_edge(op: &DiscreteOperator) -> Vec<f64> {
    let cutoff = op.edge - 10.0 * op.h;
    let floor = op
        .diag
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min)
        - 2.0 / (op.h * op.h)
        - 1.0;
    let total = op.count_below(cutoff);
    let mut out = Vec::with_capacity(total);
    for j in 0..total {
        let mut lo = floor;
        let mut hi = cutoff;
        while hi - lo > 1e-10 {
            let mid = 0.5 * (lo + hi);
            if op.count_below(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

/// Edge-resonance indicator: integrate `u'' = (W - d) u` from the left with
/// the bounded edge data `u(-L)=1, u'(-L)=0` and return
/// `u'(L)/max(1, |u(L)|)`.  Zero iff `lam = d` admits a bounded solution on
/// both sides, i.e. iff it is a resonance.
pub fn resonance_indicator(w: &LinearizedPotential, d: f64, l: f64) -> Result<f64> {
    const STEP: f64 = 1e-3;
    let mut cuts = vec![-l];
    for b in w.breakpoints() {
        if b > -l && b < l {
            cuts.push(b);
        }
    }
    cuts.push(l);
    let mut y = [1.0, 0.0];
    for pair in cuts.windows(2) {
        advance_mode(&|x| w.eval(x), d, pair[0], pair[1], STEP, &mut y);
    }
    if !(y[0].is_finite() && y[1].is_finite()) {
        return Err(Error::numerics(
            "resonance indicator integration diverged".to_string(),
        ));
    }
    Ok(y[1] / y[0].abs().max(1.0))
}

/// Odd continuum solution of `u'' = (W - lam) u` with `phi(0)=0, phi'(0)=1`,
/// evaluated on an arbitrary grid (negative points by parity).  Requires
/// `lam` above the continuum edge.
pub fn continuum_odd_solution(
    w: &LinearizedPotential,
    lam: f64,
    x_grid: &[f64],
) -> Result<Vec<f64>> {
    if !(lam > w.edge) {
        return Err(Error::domain(format!(
            "continuum solution needs lam > edge = {}; got {lam}",
            w.edge
        )));
    }
    if x_grid.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain("non-finite grid point"));
    }
    const STEP: f64 = 1e-3;
    // march outward once over sorted |x| targets, splitting at breakpoints
    let mut order: Vec<usize> = (0..x_grid.len()).collect();
    order.sort_by(|&i, &j| x_grid[i].abs().total_cmp(&x_grid[j].abs()));
    let breaks: Vec<f64> = w.breakpoints().into_iter().filter(|&b| b > 0.0).collect();
    let mut out = vec![0.0; x_grid.len()];
    let mut y = [0.0, 1.0];
    let mut cur = 0.0;
    for &i in &order {
        let target = x_grid[i].abs();
        while let Some(&b) = breaks.iter().find(|&&b| b > cur && b < target) {
            advance_mode(&|x| w.eval(x), lam, cur, b, STEP, &mut y);
            cur = b;
        }
        if target > cur {
            advance_mode(&|x| w.eval(x), lam, cur, target, STEP, &mut y);
            cur = target;
        }
        out[i] = if x_grid[i] < 0.0 { -y[0] } else { y[0] };
    }
    Ok(out)
}

/// Internal-mode eigenvalue of a mollified operator by shooting: the odd
/// solution from the origin must match the decaying tail, encoded as the
/// root of `u'(xR) + alpha u(xR)` in `lam`.
pub fn shooting_lambda1(model: &PotentialModel, kink: &KinkProfile) -> Result<f64> {
    if model.kind != ModelKind::Mollified {
        return Err(Error::domain(
            "shooting_lambda1 expects a mollified model (the exact one is transcendental)",
        ));
    }
    let p = &model.params;
    let xr = p.q + 5.0;
    let step = 2.5e-4;
    let miss = |lam: f64| {
        let mut y = [0.0, 1.0];
        advance_mode(&|x| model.value(kink.eval(x), 2), lam, 0.0, xr, step, &mut y);
        y[1] + (p.d - lam).sqrt() * y[0]
    };
    let lam_a = lambda1(p)?;
    let lo = lam_a - 0.1;
    let hi = (lam_a + 0.1).min(p.d - 1e-9);
    bisect(miss, lo, hi)
}

/// Numeric Fermi-golden-rule integral for a mollified model:
/// `int U_eps'''(s_eps(x)) phi_{4 lam1}(x) phi_{lam1}(x)^2 dx` with the
/// `lam1`-eigenfunction normalized to unit L2 and the continuum solution
/// normalized by `phi'(0)=1`.  Both half-lines are integrated explicitly.
pub fn fgr_integral_numeric(model: &PotentialModel, kink: &KinkProfile, lam1: f64) -> Result<f64> {
    fgr_probe(model, kink, lam1, false)
}

/// As [`fgr_integral_numeric`], but optionally replacing the continuum
/// factor by the even solution (`phi(0)=1, phi'(0)=0`), which must
/// integrate to zero by parity — a self-test of the quadrature.
pub fn fgr_probe(
    model: &PotentialModel,
    kink: &KinkProfile,
    lam1: f64,
    even_probe: bool,
) -> Result<f64> {
    if model.kind != ModelKind::Mollified {
        return Err(Error::domain("fgr_integral_numeric expects a mollified model"));
    }
    let p = &model.params;
    if !(lam1 > 0.0 && lam1 < p.d) {
        return Err(Error::domain(format!(
            "lam1 must lie in (0, d) = (0, {}); got {lam1}",
            p.d
        )));
    }
    let lam4 = 4.0 * lam1;
    let alpha = (p.d - lam1).sqrt();
    let xf = p.q + 6.0;
    let n = 24_000usize;
    // state: [u1, u1', u4, u4', integral, norm accumulator]
    let f = |x: f64, s: &[f64; 6]| {
        let sx = kink.eval(x);
        let w = model.value(sx, 2);
        let u3 = model.value(sx, 3);
        [
            s[1],
            (w - lam1) * s[0],
            s[3],
            (w - lam4) * s[2],
            u3 * s[2] * s[0] * s[0],
            s[0] * s[0],
        ]
    };
    let side = |dir: f64| {
        let u4_init = if even_probe { [1.0, 0.0] } else { [0.0, 1.0] };
        let mut y = [0.0, 1.0, u4_init[0], u4_init[1], 0.0, 0.0];
        let h = dir * xf / n as f64;
        for i in 0..n {
            rk4_step(&f, i as f64 * h, h, &mut y);
        }
        y
    };
    let plus = side(1.0);
    let minus = side(-1.0);
    if !(plus.iter().all(|v| v.is_finite()) && minus.iter().all(|v| v.is_finite())) {
        return Err(Error::numerics("fgr integration diverged".to_string()));
    }
    // accumulators at -xf carried a negative orientation
    let integral = plus[4] - minus[4];
    let norm2 =
        plus[5] - minus[5] + (plus[0] * plus[0] + minus[0] * minus[0]) / (2.0 * alpha);
    Ok(integral / norm2)
}

/// Mollification convergence data at one gamma.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub epsilons: Vec<f64>,
    /// shooting eigenvalues of the smoothed operators
    pub lambda1_values: Vec<f64>,
    /// support pads delta(eps) of the smoothed linearized potentials
    pub deltas: Vec<f64>,
    /// L2 norms of w_eps = W_eps - W_0
    pub w_norms: Vec<f64>,
}

/// L2 norm of the difference between a mollified linearized potential and
/// its piecewise-constant limit, supported on the pad around the jump.
pub fn w_l2_norm(wl: &LinearizedPotential) -> f64 {
    let p = &wl.source.model.params;
    let (q, b, d) = (p.q, p.b, p.d);
    let w0 = |x: f64| if x.abs() <= q { -b } else { d };
    let f = |x: f64| (wl.eval(x) - w0(x)).powi(2);
    let pad = wl.support_pad;
    // split at the jump of the limit potential
    let int = gl20_cells(&f, q - pad, q, 32) + gl20_cells(&f, q, q + pad, 32);
    (2.0 * int).sqrt()
}

/// Build the mollification sequence at one gamma and record eigenvalues,
/// pads, and potential-difference norms.  Epsilons must decrease strictly;
/// gamma must sit in the U3/U4 window so the internal mode exists.
pub fn convergence_study(gamma: f64, epsilons: &[f64]) -> Result<ConvergenceReport> {
    let g1 = gamma_k(1)?;
    let g2 = gamma_k(2)?;
    if !(gamma > g1 && gamma < g2) {
        return Err(Error::domain(format!(
            "convergence_study requires gamma in ({g1:.10}, {g2:.10}); got {gamma}"
        )));
    }
    if epsilons.is_empty() || epsilons.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::domain("epsilons must be strictly decreasing"));
    }
    let mut report = ConvergenceReport {
        epsilons: epsilons.to_vec(),
        lambda1_values: Vec::new(),
        deltas: Vec::new(),
        w_norms: Vec::new(),
    };
    for &eps in epsilons {
        let model = PotentialModel::mollified_default(gamma, eps)?;
        let kink = crate::kink::kink_mollified_default(&model)?;
        let wl = crate::linearized::linearize(&kink);
        report.lambda1_values.push(shooting_lambda1(&model, &kink)?);
        report.deltas.push(wl.support_pad);
        report.w_norms.push(w_l2_norm(&wl));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kink::{kink_mollified_default, KinkProfile};
    use crate::linearized::linearize;
    use crate::modes::{antisym_modes, lambda1};
    use crate::params::{derive_params, kink_exact_deriv};

    fn exact_w(gamma: f64) -> LinearizedPotential {
        let model = PotentialModel::exact(derive_params(gamma).unwrap());
        linearize(&KinkProfile::exact(&model))
    }

    #[test]
    fn grid_is_jump_aligned() {
        let w = exact_w(0.75);
        let op = discretize(&w, 30.0, 0.005).unwrap();
        assert!(op.n == 12_000, "n {}", op.n);
        assert!((op.h - 0.005).abs() < 5e-5);
        assert!(op.note.is_some(), "expected an adjustment note");
        let q = w.jump_locus;
        for x in op.nodes() {
            assert!((x - q).abs() >= 0.499 * op.h, "node too close to +q");
            assert!((x + q).abs() >= 0.499 * op.h, "node too close to -q");
        }
    }

    #[test]
    fn discretize_domain_errors() {
        let w = exact_w(0.75);
        assert!(discretize(&w, 2.0, 0.005).is_err());
        assert!(discretize(&w, 30.0, 0.05).is_err());
        assert!(discretize(&w, 30.0, 0.0).is_err());
    }

    #[test]
    fn free_operator_floor() {
        // constant W = d has no bound states: everything sits at the edge
        let d = 4.0;
        let op = DiscreteOperator::assemble(20.0, 0.01, 1.0, d, &|_| d);
        assert!(eigs_below_edge(&op).is_empty());
        assert!(op.count_below(d - 0.5) == 0);
        // Gershgorin bottom for the true potential: nothing below -b
        let w = exact_w(0.75);
        let op = discretize(&w, 30.0, 0.01).unwrap();
        assert!(op.count_below(-w.source.model.params.b - 1e-9) == 0);
    }

    #[test]
    fn oracle_matches_analytic_spectrum() {
        for g in [0.70, 0.75, 0.80, 0.85] {
            let p = derive_params(g).unwrap();
            let w = exact_w(g);
            let op = discretize(&w, 30.0, 0.005).unwrap();
            let eigs = eigs_below_edge(&op);
            assert!(eigs.len() == 2, "count {} at gamma={g}", eigs.len());
            let lam = lambda1(&p).unwrap();
            assert!(eigs[0].abs() < 6e-5, "e0 {} at gamma={g}", eigs[0]);
            assert!((eigs[1] - lam).abs() < 6e-5, "e1 {} at gamma={g}", eigs[1]);
        }
    }

    #[test]
    fn oracle_second_order_in_h() {
        let p = derive_params(0.75).unwrap();
        let lam = lambda1(&p).unwrap();
        let w = exact_w(0.75);
        let coarse = eigs_below_edge(&discretize(&w, 30.0, 0.01).unwrap());
        let fine = eigs_below_edge(&discretize(&w, 30.0, 0.005).unwrap());
        let (ec, ef) = ((coarse[1] - lam).abs(), (fine[1] - lam).abs());
        assert!(ec / ef >= 3.0, "Richardson ratio {}", ec / ef);
    }

    #[test]
    fn oracle_mode_counts() {
        let cases = [(0.50, 1), (0.60, 1), (0.75, 2), (0.90, 3), (0.94, 4), (0.963, 5)];
        for (g, want) in cases {
            let w = exact_w(g);
            let op = discretize(&w, 30.0, 0.005).unwrap();
            let got = eigs_below_edge(&op).len();
            assert!(got == want, "count {got} at gamma={g}, want {want}");
        }
    }

    #[test]
    fn groundstate_vector_is_kink_slope() {
        let p = derive_params(0.75).unwrap();
        let w = exact_w(0.75);
        let op = discretize(&w, 30.0, 0.005).unwrap();
        let e0 = eigs_below_edge(&op)[0];
        let v = op.eigenvector(e0);
        let slope: Vec<f64> = op.nodes().iter().map(|&x| kink_exact_deriv(&p, x)).collect();
        let dot: f64 = v.iter().zip(&slope).map(|(a, b)| a * b).sum();
        let ns: f64 = slope.iter().map(|x| x * x).sum::<f64>().sqrt();
        let corr = (dot / ns).abs();
        assert!(corr > 0.999, "correlation {corr}");
    }

    #[test]
    fn indicator_frozen_value() {
        // closed form at gamma=0.75, L=30: the interior solution is
        // cos(omega(x+q)), so u'(L) = -omega sin 2R = 2 exactly here
        let w = exact_w(0.75);
        let v = resonance_indicator(&w, 4.0, 30.0).unwrap();
        assert!((v - 0.034670336717582136).abs() < 1e-9, "indicator {v}");
    }

    #[test]
    fn indicator_vanishes_at_resonance_parameters() {
        for k in [1, 2] {
            let g = gamma_k(k).unwrap();
            let w = exact_w(g);
            let d = derive_params(g).unwrap().d;
            let v = resonance_indicator(&w, d, 30.0).unwrap();
            assert!(v.abs() < 1e-8, "indicator {v:.2e} at gamma_{k}");
            // sign change across the resonance
            let lo = resonance_indicator(&exact_w(g - 0.01), derive_params(g - 0.01).unwrap().d, 30.0)
                .unwrap();
            let hi = resonance_indicator(&exact_w(g + 0.01), derive_params(g + 0.01).unwrap().d, 30.0)
                .unwrap();
            assert!(lo.signum() != hi.signum(), "no flip around gamma_{k}");
        }
    }

    #[test]
    fn continuum_solution_closed_form() {
        let p = derive_params(0.75).unwrap();
        let lam = 4.0 * lambda1(&p).unwrap();
        let w = exact_w(0.75);
        let bt = (p.b + lam).sqrt();
        let grid: Vec<f64> = (0..40).map(|i| -0.9 + i as f64 * 0.046).collect();
        let phi = continuum_odd_solution(&w, lam, &grid).unwrap();
        for (i, &x) in grid.iter().enumerate() {
            if x.abs() <= p.q {
                let want = (bt * x).sin() / bt;
                assert!((phi[i] - want).abs() < 1e-10, "phi({x}) = {}", phi[i]);
            }
        }
        // value at the jump matches the analytic FGR obstruction
        let at_q = continuum_odd_solution(&w, lam, &[p.q]).unwrap()[0];
        let fgr = crate::conditions::fgr_value_analytic(&p).unwrap();
        assert!((bt * at_q - fgr).abs() < 1e-9);
        // bounded oscillation beyond the well
        let far: Vec<f64> = (0..60).map(|i| p.q + 0.1 + i as f64 * 0.15).collect();
        for v in continuum_odd_solution(&w, lam, &far).unwrap() {
            assert!(v.abs() < 2.0, "unbounded tail {v}");
        }
        assert!(continuum_odd_solution(&w, 1.0, &[0.5]).is_err());
    }

    #[test]
    fn shooting_gaps_shrink() {
        // frozen |lambda1(eps) - lambda1| at gamma=0.75
        let p = derive_params(0.75).unwrap();
        let lam = lambda1(&p).unwrap();
        let frozen = [(0.08, 2.071e-2), (0.04, 5.159e-3), (0.02, 1.288e-3)];
        let mut prev = f64::INFINITY;
        for (eps, gap) in frozen {
            let model = PotentialModel::mollified_default(0.75, eps).unwrap();
            let kink = kink_mollified_default(&model).unwrap();
            let le = shooting_lambda1(&model, &kink).unwrap();
            let d = (le - lam).abs();
            assert!((d - gap).abs() < 0.02 * gap, "gap {d:.4e} at eps={eps}");
            assert!(d < prev, "gaps not decreasing at eps={eps}");
            assert!(4.0 * le > p.d, "4 lambda1(eps) below edge at eps={eps}");
            prev = d;
        }
    }

    #[test]
    fn fgr_numeric_frozen_sequence() {
        // frozen values at gamma=0.75 and the closed-form eps -> 0 limit
        let p = derive_params(0.75).unwrap();
        let frozen = [(0.08, -0.747657), (0.04, -0.712255), (0.02, -0.703189)];
        let mut vals = Vec::new();
        for (eps, want) in frozen {
            let model = PotentialModel::mollified_default(0.75, eps).unwrap();
            let kink = kink_mollified_default(&model).unwrap();
            let le = shooting_lambda1(&model, &kink).unwrap();
            let v = fgr_integral_numeric(&model, &kink, le).unwrap();
            assert!((v - want).abs() < 1e-4, "fgr {v} at eps={eps}");
            vals.push(v);
        }
        // Cauchy differences shrink
        assert!((vals[2] - vals[1]).abs() < (vals[1] - vals[0]).abs());
        // limit 2(b+d) phi4(q) phi1(q)^2 / s0'(q) from closed forms
        let m = antisym_modes(&p)[0];
        let phi1q = m.coef_b * m.xi.sin();
        let bt = (p.b + 4.0 * m.lambda).sqrt();
        let phi4q = (bt * p.q).sin() / bt;
        let limit = 2.0 * (p.b + p.d) * phi4q * phi1q * phi1q / (1.0 - 0.75f64).sqrt();
        assert!((limit - -0.700149).abs() < 1e-5, "limit {limit}");
        let mut prev = f64::INFINITY;
        for v in &vals {
            let gap = (v - limit).abs();
            assert!(gap < prev, "not approaching the limit");
            prev = gap;
        }
        assert!(prev < 5e-3);
    }

    #[test]
    fn fgr_numeric_signs_match_analytic() {
        for g in [0.70, 0.85] {
            let p = derive_params(g).unwrap();
            let model = PotentialModel::mollified_default(g, 0.02).unwrap();
            let kink = kink_mollified_default(&model).unwrap();
            let le = shooting_lambda1(&model, &kink).unwrap();
            let v = fgr_integral_numeric(&model, &kink, le).unwrap();
            let a = crate::conditions::fgr_value_analytic(&p).unwrap();
            assert!(v.signum() == a.signum(), "sign clash at gamma={g}: {v} vs {a}");
        }
    }

    #[test]
    fn fgr_even_probe_is_zero() {
        let model = PotentialModel::mollified_default(0.75, 0.04).unwrap();
        let kink = kink_mollified_default(&model).unwrap();
        let le = shooting_lambda1(&model, &kink).unwrap();
        let odd = fgr_probe(&model, &kink, le, false).unwrap();
        let even = fgr_probe(&model, &kink, le, true).unwrap();
        assert!(even.abs() < 1e-9 * (1.0 + odd.abs()), "parity leak {even:.2e}");
    }

    #[test]
    fn convergence_report_frozen() {
        let r = convergence_study(0.75, &[0.08, 0.04, 0.02]).unwrap();
        let pads = [0.1970, 0.0882, 0.0419];
        let wn = [0.9886, 0.6950, 0.4907];
        for i in 0..3 {
            assert!((r.deltas[i] - pads[i]).abs() < 0.02 * pads[i], "delta[{i}]");
            assert!((r.w_norms[i] - wn[i]).abs() < 1e-3, "w_norm[{i}] {}", r.w_norms[i]);
        }
        assert!(r.w_norms[0] > r.w_norms[1] && r.w_norms[1] > r.w_norms[2]);
        assert!(convergence_study(0.5, &[0.08, 0.04]).is_err());
        assert!(convergence_study(0.75, &[0.04, 0.08]).is_err());
        assert!(convergence_study(0.75, &[]).is_err());
    }
}
