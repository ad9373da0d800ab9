//! Parameter scans over `gamma`: discrete-spectrum staircase and the sign of
//! the coupling coefficient.  Scans fan out over points with scoped threads
//! (capped by `KINKSPEC_THREADS`) and merge results in index order, so output
//! is deterministic regardless of scheduling.

use std::thread;

use serde::Serialize;

use crate::conditions::fgr_value_analytic;
use crate::error::{Error, Result};
use crate::modes::{antisym_modes, gamma_k, lambda1, sym_modes};
use crate::params::derive_params;

/// Worker cap: `KINKSPEC_THREADS` if set to a positive integer, otherwise the
/// machine's available parallelism.
pub fn threads_cap() -> usize {
    if let Ok(v) = std::env::var("KINKSPEC_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n > 0 {
                return n;
            }
        }
    }
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Apply `f` to every item on a scoped thread pool; results keep item order.
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let n = items.len();
    if n == 0 {
        return Vec::new();
    }
    let workers = threads_cap().min(n);
    let chunk = n.div_ceil(workers);
    let mut out: Vec<Option<R>> = Vec::with_capacity(n);
    out.resize_with(n, || None);
    thread::scope(|s| {
        for (slots, part) in out.chunks_mut(chunk).zip(items.chunks(chunk)) {
            let f = &f;
            s.spawn(move || {
                for (slot, item) in slots.iter_mut().zip(part) {
                    *slot = Some(f(item));
                }
            });
        }
    });
    out.into_iter().map(|r| r.expect("worker filled slot")).collect()
}

fn grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}

/// One row of the discrete-spectrum staircase.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CountRow {
    pub gamma: f64,
    pub antisym: usize,
    pub sym: usize,
    pub total: usize,
}

fn count_at(gamma: f64) -> Result<CountRow> {
    let p = derive_params(gamma)?;
    let antisym = antisym_modes(&p).len();
    let sym = sym_modes(&p).len();
    Ok(CountRow {
        gamma,
        antisym,
        sym,
        total: antisym + sym,
    })
}

/// Count discrete eigenvalues on a uniform `gamma`-grid.
pub fn mode_count_scan(a: f64, b: f64, n: usize) -> Result<Vec<CountRow>> {
    if !(a > 0.0 && b < 1.0 && a < b) || n < 2 {
        return Err(Error::domain(format!(
            "mode_count_scan needs 0 < a < b < 1 and n >= 2; got a={a}, b={b}, n={n}"
        )));
    }
    par_map(&grid(a, b, n), |&g| count_at(g)).into_iter().collect()
}

/// A refined staircase jump: the total count steps from `before` to `after`
/// as `gamma` crosses `location`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Transition {
    pub location: f64,
    pub before: usize,
    pub after: usize,
}

/// Locate every staircase jump to within `tol` by bisecting between scan rows
/// with different totals.
pub fn refine_transitions(rows: &[CountRow], tol: f64) -> Result<Vec<Transition>> {
    assert!(tol > 0.0, "tol must be positive, got {tol}");
    let mut out = Vec::new();
    for w in rows.windows(2) {
        let (lo_row, hi_row) = (w[0], w[1]);
        if lo_row.total == hi_row.total {
            continue;
        }
        let (mut lo, mut hi) = (lo_row.gamma, hi_row.gamma);
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if count_at(mid)?.total > lo_row.total {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(Transition {
            location: 0.5 * (lo + hi),
            before: lo_row.total,
            after: hi_row.total,
        });
    }
    Ok(out)
}

/// One row of the coupling-coefficient scan.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FgrRow {
    pub gamma: f64,
    pub lambda1: f64,
    pub fgr_value: f64,
}

/// Scan `lambda_1` and the coupling coefficient over `[a, b]`, which must sit
/// strictly inside the two-eigenvalue window `(gamma_1, gamma_2)`.
pub fn fgr_scan(a: f64, b: f64, n: usize) -> Result<Vec<FgrRow>> {
    let g1 = gamma_k(1)?;
    let g2 = gamma_k(2)?;
    if !(a > g1 && b < g2 && a < b) || n < 2 {
        return Err(Error::domain(format!(
            "fgr_scan range must satisfy {g1:.10} < a < b < {g2:.10} with n >= 2; \
             got a={a}, b={b}, n={n}"
        )));
    }
    par_map(&grid(a, b, n), |&g| {
        let p = derive_params(g)?;
        Ok(FgrRow {
            gamma: g,
            lambda1: lambda1(&p)?,
            fgr_value: fgr_value_analytic(&p)?,
        })
    })
    .into_iter()
    .collect()
}

/// Indices `i` where the coupling coefficient changes sign between rows `i`
/// and `i+1`.
pub fn sign_changes(rows: &[FgrRow]) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, w) in rows.windows(2).enumerate() {
        if w[0].fgr_value == 0.0 || w[0].fgr_value * w[1].fgr_value < 0.0 {
            out.push(i);
        }
    }
    out
}
