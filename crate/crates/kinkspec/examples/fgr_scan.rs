//! Scan the coupling coefficient across the two-eigenvalue window and locate
//! its single zero `gamma_*`.
//!
//! The coefficient is `sin(beta~ q)` with `beta~ = sqrt(b + 4 lambda_1)`: the
//! overlap that feeds the internal mode's energy into the continuum at
//! frequency `2 sqrt(lambda_1)`.  It vanishes exactly where
//! `sqrt(1 + 4 gamma lambda_1) asin(sqrt(gamma)) = pi`.
//!
//! Run with: `cargo run --example fgr_scan`

use kinkspec::{derive_params, fgr_scan, fgr_value_analytic, gamma_k, sign_changes, solve_gamma_star};
use kinkspec::roots::bisect;

fn main() -> anyhow::Result<()> {
    let g1 = gamma_k(1)?;
    let g2 = gamma_k(2)?;
    println!("window (gamma_1, gamma_2) = ({g1:.10}, {g2:.10})");

    let rows = fgr_scan(g1 + 5e-3, g2 - 5e-3, 41)?;
    println!("{:>10} {:>14} {:>14}", "gamma", "lambda1", "fgr_value");
    for r in rows.iter().step_by(4) {
        println!("{:>10.6} {:>14.8} {:>14.8}", r.gamma, r.lambda1, r.fgr_value);
    }

    let changes = sign_changes(&rows);
    assert!(changes.len() == 1, "expected one sign change, got {}", changes.len());
    let i = changes[0];
    println!(
        "\nsign change between gamma = {:.6} and {:.6}",
        rows[i].gamma,
        rows[i + 1].gamma
    );

    let f = |g: f64| fgr_value_analytic(&derive_params(g).unwrap()).unwrap();
    let refined = bisect(f, rows[i].gamma, rows[i + 1].gamma)?;
    let star = solve_gamma_star()?;
    println!("refined zero:      gamma = {refined:.12}");
    println!("closed-form zero:  gamma_* = {star:.12}");
    assert!((refined - star).abs() < 1e-9);
    Ok(())
}
