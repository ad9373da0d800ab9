//! The resonance set `{gamma_k}`: parameters where an edge resonance sits at
//! the top of the continuous spectrum and a new discrete eigenvalue is born.
//!
//! `gamma_k` solves `R(gamma) = k pi / 2` with `R` the spectral radius; the
//! gap closes like `1 - gamma_k ≈ pi^2 / (2 + k pi)^2`.
//!
//! Run with: `cargo run --example resonance_table`

use std::f64::consts::PI;

use kinkspec::{derive_params, gamma_k};

fn main() -> anyhow::Result<()> {
    println!("{:>3} {:>20} {:>14} {:>14}", "k", "gamma_k", "1-gamma_k", "pi^2/(2+k pi)^2");
    for k in 1..=12u32 {
        let g = gamma_k(k)?;
        let gap = 1.0 - g;
        let asym = (PI / (2.0 + k as f64 * PI)).powi(2);
        println!("{k:>3} {g:>20.15} {gap:>14.6e} {asym:>14.6e}");
    }
    println!();

    // each gamma_k really does put R on a half-integer multiple of pi
    for k in [1u32, 2, 3, 8] {
        let g = gamma_k(k)?;
        let r = derive_params(g)?.r;
        let miss = (r - k as f64 * PI / 2.0).abs();
        assert!(miss < 1e-12, "R(gamma_{k}) off the lattice by {miss:.2e}");
        println!("R(gamma_{k}) = {r:.15} = {k} pi/2  (checked to 1e-12)");
    }
    Ok(())
}
