//! Cross-check the closed-form spectrum with a finite-difference oracle:
//! discretize the linearized operator on a jump-aligned grid, count
//! eigenvalues below the continuum edge with Sturm sequences, and bisect
//! each one out.
//!
//! Run with: `cargo run --example oracle_spectrum`

use kinkspec::{
    all_modes, derive_params, discretize, eigs_below_edge, linearize, KinkProfile,
    PotentialModel,
};

fn main() -> anyhow::Result<()> {
    for gamma in [0.5, 0.75, 0.9] {
        let p = derive_params(gamma)?;
        let kink = KinkProfile::exact(&PotentialModel::exact(p));
        let w = linearize(&kink);
        let op = discretize(&w, 30.0, 0.005)?;
        let fd = eigs_below_edge(&op);
        let analytic = all_modes(&p);

        println!("gamma = {gamma}  (edge d = {:.4}, grid n = {})", p.d, op.n);
        if let Some(note) = &op.note {
            println!("  {note}");
        }
        println!("  {:>16} {:>16} {:>10}", "analytic", "oracle", "diff");
        for (m, lf) in analytic.iter().zip(&fd) {
            println!(
                "  {:>16.10} {:>16.10} {:>10.2e}",
                m.lambda,
                lf,
                (m.lambda - lf).abs()
            );
            assert!((m.lambda - lf).abs() < 5e-3, "oracle disagrees");
        }
        assert_eq!(analytic.len(), fd.len(), "mode count mismatch");
        println!();
    }

    // halving h shrinks the error like h^2 (second-order scheme)
    let p = derive_params(0.75)?;
    let kink = KinkProfile::exact(&PotentialModel::exact(p));
    let w = linearize(&kink);
    let lam1 = all_modes(&p)[1].lambda;
    println!("second-order convergence of the oracle at gamma = 0.75:");
    let mut prev = f64::NAN;
    for h in [0.01, 0.005, 0.0025] {
        let fd = eigs_below_edge(&discretize(&w, 30.0, h)?);
        let err = (fd[1] - lam1).abs();
        let note = if prev.is_finite() {
            format!("  (ratio {:.2})", prev / err)
        } else {
            String::new()
        };
        println!("  h = {h:<7} |lambda_1 error| = {err:.3e}{note}");
        prev = err;
    }
    Ok(())
}
