//! Mollification kernels and their incomplete moments.
//!
//! Convolving the piecewise-quadratic potential with a compactly supported
//! even kernel `h_eps(u) = h(u/eps)/eps` has a closed form on each quadratic
//! branch (a constant level shift) and reduces, inside the blend zone around
//! the matching points, to the incomplete moments
//! `M_k(z) = int_{-1}^z u^k h(u) du`, `k = 0, 1, 2`. Everything downstream
//! (smoothed values, derivatives up to third order) is assembled from those
//! three functions.

use serde::{Deserialize, Serialize};

use crate::quad::{gl20, gl20_cells};

/// Kernel family for [`crate::potential::build_mollified`]. Only one member
/// is shipped: the standard normalized bump, which is smooth, even,
/// supported in [-1, 1], and has unit mass after normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mollifier {
    /// `exp(-1/(1-u^2))` on (-1, 1), normalized to unit mass.
    StandardBump,
}

impl Mollifier {
    /// Kernel before normalization.
    fn raw(&self, u: f64) -> f64 {
        match self {
            Mollifier::StandardBump => {
                if u.abs() < 1.0 {
                    (-1.0 / (1.0 - u * u)).exp()
                } else {
                    0.0
                }
            }
        }
    }
}

/// A normalized kernel with its precomputed mass and second moment.
#[derive(Debug, Clone)]
pub struct Kernel {
    pub kind: Mollifier,
    /// Mass of the raw kernel; the normalization constant.
    pub mass: f64,
    /// Second moment of the normalized kernel, `m2 = int u^2 h(u) du`.
    pub m2: f64,
}

impl Kernel {
    pub fn new(kind: Mollifier) -> Kernel {
        let mass = gl20_cells(&|u| kind.raw(u), -1.0, 1.0, 64);
        let m2 = gl20_cells(&|u| u * u * kind.raw(u), -1.0, 1.0, 64) / mass;
        Kernel { kind, mass, m2 }
    }

    /// Normalized kernel value `h(u)`.
    pub fn h(&self, u: f64) -> f64 {
        self.kind.raw(u) / self.mass
    }

    /// Incomplete moments `(M0, M1, M2)` of `h` at each point of `zs`,
    /// which must be ascending. Computed by one cumulative sweep; points
    /// outside [-1, 1] get the saturated values.
    pub fn incomplete_moments(&self, zs: &[f64]) -> Vec<[f64; 3]> {
        let mut out = Vec::with_capacity(zs.len());
        let mut acc = [0.0f64; 3];
        let mut prev = -1.0f64;
        let mut last = f64::NEG_INFINITY;
        for &z in zs {
            debug_assert!(z >= last, "moment sweep needs ascending points");
            last = z;
            let zc = z.clamp(-1.0, 1.0);
            if zc > prev {
                acc[0] += gl20(|u| self.h(u), prev, zc);
                acc[1] += gl20(|u| u * self.h(u), prev, zc);
                acc[2] += gl20(|u| u * u * self.h(u), prev, zc);
                prev = zc;
            }
            out.push(acc);
        }
        out
    }
}
