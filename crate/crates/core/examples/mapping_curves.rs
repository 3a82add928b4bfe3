//! Samples g_s(ω) of every scheme and writes one CSV per scheme.
//!
//! `cargo run --example mapping_curves [out_dir]` (default `mapping-curves`)

use std::path::PathBuf;

use weno_core::diagnostics::write_csv;
use weno_core::experiment::mapping_curve;
use weno_core::mapping::MappingSpec;

fn main() -> weno_core::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "mapping-curves".into()));
    for spec in MappingSpec::all_schemes() {
        let curve = mapping_curve(&spec, 1001);
        let path = dir.join(format!("{}.csv", spec.name()));
        write_csv(&path, &curve)?;
        let mid = &curve[500];
        println!(
            "{:<16} g(0.5) = ({:.5}, {:.5}, {:.5}) -> {}",
            spec.to_string(),
            mid.g[0],
            mid.g[1],
            mid.g[2],
            path.display()
        );
    }
    Ok(())
}
