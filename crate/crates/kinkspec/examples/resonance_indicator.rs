//! Detect edge resonances numerically: integrate the linearized equation at
//! the continuum edge from the far left and read off the growth of the
//! solution.  The indicator vanishes exactly on the resonance set
//! `{gamma_k}` and flips sign across each member.
//!
//! Run with: `cargo run --example resonance_indicator`

use kinkspec::{derive_params, gamma_k, linearize, resonance_indicator, KinkProfile, PotentialModel};

fn indicator(gamma: f64) -> anyhow::Result<f64> {
    let p = derive_params(gamma)?;
    let kink = KinkProfile::exact(&PotentialModel::exact(p));
    let w = linearize(&kink);
    Ok(resonance_indicator(&w, p.d, 30.0)?)
}

fn main() -> anyhow::Result<()> {
    println!("{:>8} {:>16}", "gamma", "indicator");
    for gamma in [0.55, 0.60, 0.6464369927520271, 0.70, 0.75, 0.80, 0.857895873829, 0.90] {
        println!("{gamma:>8.6} {:>16.6e}", indicator(gamma)?);
    }
    println!();

    for k in [1u32, 2] {
        let gk = gamma_k(k)?;
        let at = indicator(gk)?;
        let below = indicator(gk - 1e-3)?;
        let above = indicator(gk + 1e-3)?;
        println!("gamma_{k} = {gk:.12}");
        println!("  indicator at gamma_{k}        = {at:.3e}  (vanishes)");
        println!("  indicator at gamma_{k} - 1e-3 = {below:.3e}");
        println!("  indicator at gamma_{k} + 1e-3 = {above:.3e}");
        assert!(at.abs() < 1e-6, "no zero at gamma_{k}");
        assert!(below * above < 0.0, "no sign flip across gamma_{k}");
    }
    Ok(())
}
