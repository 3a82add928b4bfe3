//! The square-Gaussian-triangle-ellipse profile advected for many periods,
//! reporting L1 error, overshoot and non-OP counts per scheme.
//!
//! `cargo run --release --example slp_long_run [t_end] [N]` (default 20, 200)

use weno_core::config::RunConfig;
use weno_core::experiment::simulate;

fn main() -> weno_core::Result<()> {
    let mut args = std::env::args().skip(1);
    let t: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(20.0);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let schemes = ["js", "m", "pm", "im", "mip-acmk", "mop-acmk"];
    let mut cfg = RunConfig::new("slp-long", &schemes)?;
    cfg.t_end = Some(t);
    cfg.resolutions = Some(vec![n]);
    println!("SLP, N = {n}, t = {t}");
    for s in schemes {
        let o = simulate(&cfg, s, n)?;
        let e = o.errors.unwrap();
        let (above, below) = o.overshoot.unwrap();
        println!(
            "{:<16} L1 {:.5e}  Linf {:.5e}  overshoot {:.2e}/{:.2e}  non-OP {}  ({} steps, {:.1}s)",
            o.mapping.to_string(),
            e.l1,
            e.linf,
            above,
            below,
            o.nonop_count().unwrap_or(0),
            o.stats.steps,
            o.runtime_s
        );
    }
    Ok(())
}
