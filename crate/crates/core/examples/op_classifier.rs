//! Sampling certificate of the order-preserving property for each mapping.

use weno_core::mapping::{classify_op_set, MappingSpec};

fn main() -> weno_core::Result<()> {
    for spec in MappingSpec::all_schemes() {
        let v = classify_op_set(&spec, 1001)?;
        match v.witnesses.first() {
            None => println!("{:<16} OP", spec.to_string()),
            Some(w) => println!(
                "{:<16} non-OP, {} violations; e.g. g_{}({:.4}) = {:.4} vs g_{}({:.4}) = {:.4}",
                spec.to_string(),
                v.violations,
                w.m,
                w.omega_a,
                w.g_a,
                w.n,
                w.omega_b,
                w.g_b
            ),
        }
    }
    Ok(())
}
