//! Where and how often each mapping reverses the order of the JS weights
//! on the SLP at N = 400, t = 2.

use weno_core::config::RunConfig;
use weno_core::experiment::simulate;

fn main() -> weno_core::Result<()> {
    let schemes = ["js", "m", "pm", "im", "mip-acmk", "mop-acmk"];
    let cfg = RunConfig::new("slp-analysis", &schemes)?;
    for s in schemes {
        let o = simulate(&cfg, s, 400)?;
        let scan = o.nonop.as_ref().expect("scanning is on by default");
        println!(
            "{:<16} non-OP instances {:>8}, points at t = 2: {}",
            o.mapping.to_string(),
            scan.count,
            scan.records.len()
        );
        for r in scan.records.iter().take(3) {
            println!(
                "    x = {:+.4} ({})  ω = [{:.5}, {:.5}, {:.5}]  g = [{:.5}, {:.5}, {:.5}]  pair {}-{}",
                r.x,
                r.bias.label(),
                r.omega[0],
                r.omega[1],
                r.omega[2],
                r.mapped[0],
                r.mapped[1],
                r.mapped[2],
                r.pair.0,
                r.pair.1
            );
        }
    }
    Ok(())
}
