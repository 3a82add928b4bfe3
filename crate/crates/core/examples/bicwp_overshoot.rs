//! Overshoot of the bi-constant profile after long advection.
//!
//! `cargo run --release --example bicwp_overshoot [t_end] [N]` (default 20, 800)

use weno_core::config::RunConfig;
use weno_core::experiment::simulate;

fn main() -> weno_core::Result<()> {
    let mut args = std::env::args().skip(1);
    let t: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(20.0);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(800);
    let schemes = ["im", "mip-acmk", "mop-acmk"];
    let mut cfg = RunConfig::new("bicwp", &schemes)?;
    cfg.t_end = Some(t);
    cfg.resolutions = Some(vec![n]);
    for s in schemes {
        let o = simulate(&cfg, s, n)?;
        let (above, below) = o.overshoot.unwrap();
        println!(
            "{:<16} above 1: {:.3e}  below 0: {:.3e}  L1 {:.4e}",
            o.mapping.to_string(),
            above,
            below,
            o.errors.unwrap().l1
        );
    }
    Ok(())
}
