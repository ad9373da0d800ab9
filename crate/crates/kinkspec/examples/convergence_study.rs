//! How the smoothed models approach the exact one as the mollification
//! radius shrinks: the internal-mode eigenvalue, the support pad of the
//! smoothed linearized potential, and the L2 size of the potential
//! difference all decrease monotonically.
//!
//! Run with: `cargo run --example convergence_study`

use kinkspec::{convergence_study, derive_params, lambda1};

fn main() -> anyhow::Result<()> {
    let gamma = 0.75;
    let p = derive_params(gamma)?;
    let lam1 = lambda1(&p)?;
    println!("gamma = {gamma}: exact internal mode lambda_1 = {lam1:.12}");
    println!();

    let rep = convergence_study(gamma, &[0.08, 0.04, 0.02])?;
    println!(
        "{:>6} {:>16} {:>12} {:>12} {:>12}",
        "eps", "lambda1(eps)", "|gap|", "delta(eps)", "w_norm(eps)"
    );
    for i in 0..rep.epsilons.len() {
        println!(
            "{:>6} {:>16.10} {:>12.4e} {:>12.6} {:>12.6}",
            rep.epsilons[i],
            rep.lambda1_values[i],
            (rep.lambda1_values[i] - lam1).abs(),
            rep.deltas[i],
            rep.w_norms[i]
        );
    }
    println!();

    // the certified inequality 4 lambda_1 > d survives smoothing
    for (eps, lam) in rep.epsilons.iter().zip(&rep.lambda1_values) {
        let margin = 4.0 * lam - p.d;
        assert!(margin > 0.0, "4 lambda_1(eps) <= d at eps = {eps}");
        println!("eps = {eps}: 4 lambda_1(eps) - d = {margin:.6} > 0");
    }
    Ok(())
}
