//! Bracketed scalar root finding.
//!
//! Every transcendental equation in this crate (circle systems, resonance
//! parameters, the critical coupling value) has an analytically known bracket
//! with a sign change, so plain bisection refined by a few secant steps is
//! both sufficient and guaranteed to converge. All roots of interest are
//! O(1), so an absolute tolerance is appropriate.

use crate::error::{Error, Result};

/// Absolute tolerance on bracketed roots.
pub const ROOT_TOL: f64 = 1e-13;

/// Find the root of `f` inside `[lo, hi]`, which must bracket a sign change.
///
/// Bisection down to `ROOT_TOL` interval width, then up to 8 secant steps
/// that are accepted only while they stay inside the bracket and shrink the
/// residual. Exact zeros at the endpoints are returned as-is.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<f64> {
    assert!(lo < hi, "bad bracket: [{lo}, {hi}]");
    let (mut a, mut b) = (lo, hi);
    let (fa0, fb0) = (f(a), f(b));
    if fa0 == 0.0 {
        return Ok(a);
    }
    if fb0 == 0.0 {
        return Ok(b);
    }
    if fa0.signum() == fb0.signum() {
        return Err(Error::numerics(format!(
            "no sign change on [{a}, {b}]: f(a)={fa0:.3e}, f(b)={fb0:.3e}"
        )));
    }
    let mut fa = fa0;
    while b - a > ROOT_TOL {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break; // interval below representable resolution
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    // Secant polish from the bracket midpoint; keeps the best |f| seen.
    let mut x0 = a;
    let mut x1 = b;
    let mut f0 = f(x0);
    let mut f1 = f(x1);
    let (mut best, mut fbest) = if f0.abs() < f1.abs() { (x0, f0) } else { (x1, f1) };
    for _ in 0..8 {
        let df = f1 - f0;
        if df == 0.0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / df;
        if !(lo..=hi).contains(&x2) {
            break;
        }
        let f2 = f(x2);
        if f2.abs() < fbest.abs() {
            best = x2;
            fbest = f2;
        }
        (x0, f0, x1, f1) = (x1, f1, x2, f2);
        if f2 == 0.0 {
            break;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_root() {
        let r = bisect(|x| x * x * x - 2.0, 1.0, 2.0).unwrap();
        assert!((r - 2f64.cbrt()).abs() < 1e-13, "r={r}");
    }

    #[test]
    fn transcendental_root() {
        // x = cos x, the classic dottie number
        let r = bisect(|x| x - x.cos(), 0.0, 1.0).unwrap();
        assert!((r - 0.7390851332151607).abs() < 1e-13, "r={r}");
    }

    #[test]
    fn endpoint_zero_is_returned() {
        let r = bisect(|x| x, 0.0, 1.0).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn no_sign_change_is_an_error() {
        let e = bisect(|x| x * x + 1.0, -1.0, 1.0).unwrap_err();
        assert!(e.to_string().contains("no sign change"), "got {e}");
    }

    #[test]
    fn steep_bracket_converges() {
        // nearly-vertical function: residual tolerance still met in x
        let r = bisect(|x| 1e8 * (x - 0.123456789), 0.0, 1.0).unwrap();
        assert!((r - 0.123456789).abs() < 1e-12, "r={r}");
    }
}
