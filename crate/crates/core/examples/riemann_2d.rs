//! Two-dimensional Riemann problem, configuration 4, with the density
//! slice along y = 0.5.
//!
//! `cargo run --release --example riemann_2d [N] [scheme]` (default 100, mop-acmk)

use weno_core::config::RunConfig;
use weno_core::diagnostics::{local_extremum_overshoot, slice_y};
use weno_core::experiment::{simulate, Solution};

fn main() -> weno_core::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let scheme = args.next().unwrap_or_else(|| "mop-acmk".into());
    let mut cfg = RunConfig::new("riemann2d-c4", &[scheme.as_str()])?;
    cfg.resolutions = Some(vec![n]);
    let o = simulate(&cfg, &cfg.schemes[0].clone(), n)?;
    let Solution::TwoD(u) = &o.solution else { unreachable!() };
    let rho: Vec<f64> = u.interior_values(0).collect();
    let (lo, hi) = rho.iter().fold((f64::MAX, f64::MIN), |(a, b), &r| (a.min(r), b.max(r)));
    let slice = slice_y(u, 0, 0.5);
    let s: Vec<f64> = slice.iter().map(|p| p.1).collect();
    println!(
        "{} {n}x{n}: {} steps, rho in [{lo:.4}, {hi:.4}], slice overshoot {:.3e} ({:.1}s)",
        o.mapping,
        o.stats.steps,
        local_extremum_overshoot(&s),
        o.runtime_s
    );
    for (x, r) in slice.iter().step_by((n / 10).max(1)) {
        println!("  x = {x:.4}  rho = {r:.5}");
    }
    Ok(())
}
