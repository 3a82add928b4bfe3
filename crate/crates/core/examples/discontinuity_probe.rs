//! Reconstructed value at an isolated jump for JS, non-OP and OP weights.

use weno_core::diagnostics::discontinuity_probe;

fn main() {
    println!("substencil values (1, 1, -1), exact value 1");
    for r in discontinuity_probe() {
        println!(
            "{:<8} ω = ({:.5}, {:.5}, {:.5})  u = {:.5}  error = {:.5} ({:.2}%)",
            r.label, r.weights[0], r.weights[1], r.weights[2], r.u, r.err, r.pct
        );
    }
}
