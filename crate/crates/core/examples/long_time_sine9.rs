//! sin⁹(πx) on N = 200 cells over long times, with errors relative to MIP.
//!
//! `cargo run --release --example long_time_sine9 [t_end]` (default 50)

use weno_core::config::RunConfig;
use weno_core::experiment::sweep;

fn main() -> weno_core::Result<()> {
    let t: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50.0);
    let mut cfg = RunConfig::new("accuracy-sine9", &["mip-acmk", "mop-acmk", "js", "m"])?;
    cfg.t_end = Some(t);
    cfg.reference = Some("mip-acmk".into());
    let report = sweep(&cfg)?;
    let inc = report.increased.expect("reference set");
    println!("t = {t}, N = 200");
    for (r, i) in report.rows.iter().zip(&inc) {
        let pct = |k: usize| i.pct[k].map(|p| format!("{p:.2}%")).unwrap_or_default();
        println!(
            "{:<10} L1 {:.5e} ({:>8})  L2 {:.5e} ({:>8})  Linf {:.5e} ({:>8})",
            r.scheme, r.norms.l1, pct(0), r.norms.l2, pct(1), r.norms.linf, pct(2)
        );
    }
    Ok(())
}
