//! Convergence table for sin(πx) advected to t = 2 with the accuracy CFL,
//! for all six schemes and N = 10..320.
//!
//! `cargo run --release --example accuracy_table [accuracy-sine|accuracy-sine-critical]`

use weno_core::config::RunConfig;
use weno_core::experiment::sweep;

fn main() -> weno_core::Result<()> {
    let problem = std::env::args().nth(1).unwrap_or_else(|| "accuracy-sine".into());
    let cfg = RunConfig::new(&problem, &["js", "m", "pm", "im", "mip-acmk", "mop-acmk"])?;
    let report = sweep(&cfg)?;
    println!("{:<10} {:>4} {:>13} {:>7} {:>13} {:>7} {:>13} {:>7}", "scheme", "N", "L1", "", "L2", "", "Linf", "");
    for r in &report.rows {
        let o = |k: usize| r.orders[k].map(|p| format!("{p:.4}")).unwrap_or_else(|| "-".into());
        println!(
            "{:<10} {:>4} {:>13.5e} {:>7} {:>13.5e} {:>7} {:>13.5e} {:>7}",
            r.scheme, r.n, r.norms.l1, o(0), r.norms.l2, o(1), r.norms.linf, o(2)
        );
    }
    Ok(())
}
