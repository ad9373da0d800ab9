//! The linearized potential `W(x) = U''(s(x))` around a kink.
//!
//! For the exact kink this is the piecewise constant `-b` on `|x| <= q`,
//! `d` outside: a finite square well whose spectrum is computable in closed
//! form. Mollified kinks give a smooth `W_eps` that differs from `W0` only
//! in a shrinking pad around `|x| = q`.

use crate::kink::KinkProfile;
use crate::potential::ModelKind;

/// Evaluatable linearized potential tied to its source kink.
#[derive(Debug, Clone)]
pub struct LinearizedPotential {
    pub source: KinkProfile,
    /// `q`: the jump locus of the exact `W0` (and center of the mollified
    /// blend pad).
    pub jump_locus: f64,
    /// Measured pad `delta`: `W = W0` wherever `||x| - q| >= delta`.
    /// Zero for the exact kink.
    pub support_pad: f64,
    /// Continuum edge `d` (the value of `W` at infinity).
    pub edge: f64,
}

/// Build `W(x) = U''(s(x))` from a kink profile.
pub fn linearize(kink: &KinkProfile) -> LinearizedPotential {
    let p = kink.model.params;
    let support_pad = match kink.model.kind {
        ModelKind::Exact => 0.0,
        ModelKind::Mollified => (p.q - kink.x_blend_lo).max(kink.tail_switch - p.q),
    };
    LinearizedPotential {
        source: kink.clone(),
        jump_locus: p.q,
        support_pad,
        edge: p.d,
    }
}

impl LinearizedPotential {
    /// `W(x)`; even in `x`. The exact case uses the branch convention
    /// `W0 = -b` on the closed interval `|x| <= q`.
    pub fn eval(&self, x: f64) -> f64 {
        let p = self.source.model.params;
        let a = x.abs();
        match self.source.model.kind {
            ModelKind::Exact => {
                if a <= p.q {
                    -p.b
                } else {
                    p.d
                }
            }
            ModelKind::Mollified => {
                if a <= self.source.x_blend_lo {
                    -p.b
                } else if a >= self.source.tail_switch {
                    p.d
                } else {
                    self.source.model.value(self.source.eval(a), 2)
                }
            }
        }
    }

    /// Abscissae where `W` is not smooth; integrators split their sweeps
    /// here. Empty for mollified kinks (those `W` are smooth).
    pub fn breakpoints(&self) -> Vec<f64> {
        match self.source.model.kind {
            ModelKind::Exact => vec![-self.jump_locus, self.jump_locus],
            ModelKind::Mollified => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kink::{kink_mollified_default, KinkProfile};
    use crate::params::derive_params;
    use crate::potential::PotentialModel;

    fn w_exact(g: f64) -> LinearizedPotential {
        let m = PotentialModel::exact(derive_params(g).unwrap());
        linearize(&KinkProfile::exact(&m))
    }

    fn w_mollified(g: f64, eps: f64) -> LinearizedPotential {
        let m = PotentialModel::mollified_default(g, eps).unwrap();
        linearize(&kink_mollified_default(&m).unwrap())
    }

    #[test]
    fn exact_square_well() {
        let w = w_exact(0.75);
        assert_eq!(w.eval(0.0), -4.0 / 3.0);
        assert_eq!(w.eval(0.9), -4.0 / 3.0);
        assert_eq!(w.eval(w.jump_locus), -4.0 / 3.0); // closed interval inside
        assert_eq!(w.eval(0.91), 4.0);
        assert_eq!(w.eval(25.0), 4.0);
        assert_eq!(w.support_pad, 0.0);
        assert_eq!(w.edge, 4.0);
    }

    #[test]
    fn evenness() {
        for w in [w_exact(0.6), w_mollified(0.75, 0.04)] {
            for i in 0..200 {
                let x = i as f64 * 0.02;
                assert_eq!(w.eval(x), w.eval(-x), "W parity at {x}");
            }
        }
    }

    #[test]
    fn mollified_deviation_bounded_by_curvature_sum() {
        let w = w_mollified(0.75, 0.08);
        let w0 = w_exact(0.75);
        let bd = 4.0 / 3.0 + 4.0;
        for i in 0..=3000 {
            let x = i as f64 * 0.005;
            let dev = (w.eval(x) - w0.eval(x)).abs();
            assert!(dev <= bd + 1e-9, "|W_eps - W0| = {dev} > b+d at {x}");
        }
    }

    #[test]
    fn mollified_matches_exact_outside_pad() {
        for eps in [0.08, 0.02] {
            let w = w_mollified(0.75, eps);
            let q = w.jump_locus;
            let pad = w.support_pad;
            for x in [0.0, q - pad - 1e-6, 0.5 * (q - pad)] {
                assert_eq!(w.eval(x), -4.0 / 3.0, "inner plateau at {x} (eps={eps})");
            }
            for x in [q + pad + 1e-6, q + 1.0, 20.0] {
                assert_eq!(w.eval(x), 4.0, "outer plateau at {x} (eps={eps})");
            }
        }
    }

    #[test]
    fn pad_shrinks_with_eps() {
        // frozen pad measurements for gamma = 0.75
        let expect = [(0.08, 0.1970), (0.04, 0.0882), (0.02, 0.0419)];
        let mut prev = f64::INFINITY;
        for (eps, pad) in expect {
            let w = w_mollified(0.75, eps);
            let rel = (w.support_pad - pad).abs() / pad;
            assert!(rel < 0.02, "pad at eps={eps}: {} vs frozen {pad}", w.support_pad);
            assert!(w.support_pad < prev);
            prev = w.support_pad;
        }
    }

    #[test]
    fn monotone_towards_the_edges() {
        // W_eps' <= 0 for x <= 0, >= 0 for x >= 0: sampled differences
        let w = w_mollified(0.7, 0.05);
        let mut prev = w.eval(0.0);
        for i in 1..=600 {
            let x = i as f64 * 0.005;
            let v = w.eval(x);
            assert!(v >= prev - 1e-9, "W_eps must be nondecreasing for x>=0 at {x}");
            prev = v;
        }
    }

    #[test]
    fn breakpoints_follow_smoothness() {
        assert_eq!(w_exact(0.75).breakpoints().len(), 2);
        assert!(w_mollified(0.75, 0.05).breakpoints().is_empty());
    }
}
