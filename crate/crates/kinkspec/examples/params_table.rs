//! Derived constants of the double-well family across a sweep of `gamma`.
//!
//! Every other quantity in the crate is a function of these seven numbers:
//! the arc curvatures `b` and `d`, the kink matching point `q`, the inner
//! amplitude `C`, the outer coefficient `A`, and the spectral radius `R`.
//!
//! Run with: `cargo run --example params_table`

use kinkspec::derive_params;

fn main() -> anyhow::Result<()> {
    println!(
        "{:>6} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "gamma", "b", "d", "q", "C", "A", "R"
    );
    for gamma in [0.1, 0.25, 0.5, 0.6464, 0.75, 0.8579, 0.9, 0.95] {
        let p = derive_params(gamma)?;
        println!(
            "{:>6.4} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            p.gamma, p.b, p.d, p.q, p.c, p.a, p.r
        );
    }
    println!();
    println!("checks: b = 1/gamma, d = 1/(1-gamma), R = q sqrt(b+d), A < 0");
    let p = derive_params(0.5)?;
    println!(
        "gamma = 0.5 is the symmetric point: b = d = {} (mass m = {:.6})",
        p.b,
        p.m()
    );
    Ok(())
}
