//! Parses a run description, prints its canonical form and runs it,
//! writing the artifacts below `out/`.

use weno_core::config::parse_config;
use weno_core::experiment::run_all;

const TEXT: &str = "
# MOP on the SLP, a short run
problem=slp scheme=mop-acmk cfs0=0.01 cfs1=0.94 k0=0 k1=0
N=200 cfl=0.1 t_end=0.5 trace=final out=out
";

fn main() -> weno_core::Result<()> {
    let cfg = parse_config(TEXT)?;
    print!("{}", cfg.to_text());
    for o in run_all(&cfg)? {
        println!("L1 = {:.5e}, non-OP = {}", o.errors.unwrap().l1, o.nonop_count().unwrap());
    }
    Ok(())
}
