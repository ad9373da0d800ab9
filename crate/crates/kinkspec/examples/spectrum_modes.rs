//! Discrete spectrum of the linearized operator at a few values of `gamma`,
//! and the staircase of mode counts across the resonance set.
//!
//! Every eigenvalue comes from the circle system in the `(xi, eta)` plane:
//! `xi^2 + eta^2 = R^2` intersected with a tangent curve per parity.  The
//! translational mode `lambda_0 = 0` is present for every `gamma`.
//!
//! Run with: `cargo run --example spectrum_modes`

use kinkspec::{all_modes, derive_params, mode_count_scan, refine_transitions};

fn main() -> anyhow::Result<()> {
    for gamma in [0.5, 0.75, 0.9, 0.963] {
        let p = derive_params(gamma)?;
        println!("gamma = {gamma}   (R = {:.6}, continuum edge d = {:.6})", p.r, p.d);
        println!("  {:>14} {:>14} {:>10} {:>10}", "lambda", "parity", "xi", "eta");
        for m in all_modes(&p) {
            println!(
                "  {:>14.10} {:>14} {:>10.6} {:>10.6}",
                m.lambda,
                format!("{:?}", m.parity).to_lowercase(),
                m.xi,
                m.eta
            );
        }
        println!();
    }

    // the count increments exactly at the gamma_k
    let rows = mode_count_scan(0.3, 0.94, 65)?;
    println!("staircase of total counts on [0.3, 0.94]:");
    let mut last = 0;
    for r in &rows {
        if r.total != last {
            println!("  count {} first seen at gamma = {:.4}", r.total, r.gamma);
            last = r.total;
        }
    }
    println!();
    for t in refine_transitions(&rows, 1e-10)? {
        println!(
            "  jump {} -> {} located at gamma = {:.12}",
            t.before, t.after, t.location
        );
    }
    Ok(())
}
