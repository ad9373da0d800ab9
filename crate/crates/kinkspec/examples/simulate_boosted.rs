//! Launch a Lorentz-boosted kink and verify it travels at the prescribed
//! velocity: the wave equation is relativistic, so `s(kappa(x - vt))` is an
//! exact traveling solution.
//!
//! Run with: `cargo run --example simulate_boosted`

use kinkspec::{derive_params, init_state, step, track_center, BoostSpec, PotentialModel, Profile};

fn main() -> anyhow::Result<()> {
    let model = PotentialModel::exact(derive_params(0.75)?);
    let spec = BoostSpec::new(0.2, 0.0)?;
    println!("boost: v = {}, kappa = {:.10}", spec.v, spec.kappa);

    let mut st = init_state(&model, &Profile::Boosted(spec), 40.0, 0.02)?;
    let mut track = Vec::new();
    println!("{:>6} {:>12}", "t", "center");
    for frame in 0..=9 {
        if frame > 0 {
            for _ in 0..500 {
                step(&mut st, 0.01)?;
            }
        }
        let c = track_center(&st)?;
        println!("{:>6.1} {c:>12.6}", st.t);
        if st.t >= 5.0 {
            track.push((st.t, c));
        }
    }

    // least-squares velocity over t in [5, 45]
    let n = track.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(t, c) in &track {
        sx += t;
        sy += c;
        sxx += t * t;
        sxy += t * c;
    }
    let v_fit = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    println!();
    println!("fitted velocity {v_fit:.6} (set {})", spec.v);
    assert!((v_fit - spec.v).abs() < 2e-3, "velocity off: {v_fit}");
    Ok(())
}
