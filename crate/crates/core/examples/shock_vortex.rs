//! Shock–vortex interaction: the derived post-shock state and a run to
//! t = 0.35 with the density slice along y = 0.65.
//!
//! `cargo run --release --example shock_vortex [N]` (default 100)

use weno_core::config::RunConfig;
use weno_core::diagnostics::slice_y;
use weno_core::experiment::{simulate, Solution};
use weno_core::problems::ShockVortexSpec;
use weno_core::solver::GasConstants;

fn main() -> weno_core::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    let gas = GasConstants::default();
    let r = ShockVortexSpec::default().right_state(&gas);
    println!("right state: rho = {:.7}, u = {:.8}, p = {}", r[0], r[1], r[3]);
    let mut cfg = RunConfig::new("shock-vortex", &["mop-acmk"])?;
    cfg.resolutions = Some(vec![n]);
    let o = simulate(&cfg, "mop-acmk", n)?;
    let Solution::TwoD(u) = &o.solution else { unreachable!() };
    let min_rho = u.interior_values(0).fold(f64::MAX, f64::min);
    println!("{n}x{n}: {} steps, min rho {min_rho:.4} ({:.1}s)", o.stats.steps, o.runtime_s);
    for (x, rho) in slice_y(u, 0, 0.65).iter().step_by((n / 10).max(1)) {
        println!("  x = {x:.4}  rho = {rho:.5}");
    }
    Ok(())
}
