//! Piecewise-parabolic double-well potentials and their kinks: exact
//! spectra of the linearized operator, mollified approximations, resonance
//! and coupling (Fermi-golden-rule) certificates, an independent
//! finite-difference oracle, and a leapfrog wave-equation test bench.
//!
//! Start with [`derive_params`] for the closed-form constants, build kinks
//! and potentials in [`potential`]/[`kink`], enumerate spectra in [`modes`],
//! and certify the spectral conditions with [`conditions::certify`]. The
//! `examples/` directory has one runnable program per capability.

pub mod cli;
pub mod conditions;
pub mod error;
pub mod kink;
pub mod linearized;
pub mod modes;
pub mod mollifier;
pub mod oracle;
pub mod params;
pub mod potential;
pub mod quad;
pub mod report;
pub mod roots;
pub mod scan;
pub mod sim;

pub use conditions::{
    certify, check_u2, check_u3, fgr_value_analytic, solve_gamma_star, solve_u3_bound,
    SpectralReport,
};
pub use error::{Error, Result};
pub use kink::{kink_for, kink_mollified, kink_mollified_default, KinkProfile};
pub use linearized::{linearize, LinearizedPotential};
pub use modes::{
    all_modes, antisym_modes, eigenfunction_eval, gamma_k, lambda1, sym_modes, EigenMode, Parity,
};
pub use mollifier::Mollifier;
pub use oracle::{
    continuum_odd_solution, convergence_study, discretize, eigs_below_edge, fgr_integral_numeric,
    resonance_indicator, shooting_lambda1, ConvergenceReport, DiscreteOperator,
};
pub use params::{derive_params, kink_exact, kink_exact_deriv, GammaParams};
pub use potential::{build_mollified, eval_potential, PotEval, PotentialModel};
pub use report::{csv_table, emit, sig12, sig17, to_json};
pub use scan::{fgr_scan, mode_count_scan, par_map, refine_transitions, sign_changes, threads_cap};
pub use sim::{
    energy, init_state, perturbation_diagnostics, step, track_center, window_sup, BoostSpec,
    FieldState, Profile,
};
