//! The discontinuity probe: a step sampled by substencil values `(1, 1, -1)`
//! so that only the weight on the crossing substencil pulls the value away
//! from the exact `1`.

use crate::kernel::{convex_combine, Triple};

pub const PROBE_SUBSTENCIL_VALUES: Triple = [1.0, 1.0, -1.0];

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeRow {
    pub label: String,
    pub weights: Triple,
    pub u: f64,
    pub err: f64,
    pub pct: f64,
}

pub fn probe_row(label: &str, weights: Triple) -> ProbeRow {
    let u = convex_combine(&weights, &PROBE_SUBSTENCIL_VALUES);
    let err = (u - 1.0).abs();
    ProbeRow {
        label: label.to_string(),
        weights,
        u,
        err,
        pct: err * 100.0,
    }
}

/// Printed weights at three probe points, each as seen by the JS weights,
/// a non-order-preserving mapping and an order-preserving one.
pub const PROBE_CASES: [(&str, Triple); 9] = [
    ("C1/JS", [0.37291, 0.53663, 0.09046]),
    ("C1/PM6", [0.10939, 0.64825, 0.24236]),
    ("C1/OP", [0.24236, 0.64825, 0.10939]),
    ("A2/JS", [0.57568, 0.38416, 0.04016]),
    ("A2/IM", [0.14069, 0.59737, 0.26194]),
    ("A2/OP", [0.59737, 0.26194, 0.14069]),
    ("C3/JS", [0.54547, 0.39684, 0.05769]),
    ("C3/MIP", [0.1, 0.6, 0.3]),
    ("C3/OP", [0.6, 0.3, 0.1]),
];

pub fn discontinuity_probe() -> Vec<ProbeRow> {
    PROBE_CASES
        .iter()
        .map(|&(label, w)| probe_row(label, w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_weights_row() {
        let r = probe_row("x", [0.1, 0.6, 0.3]);
        assert!((r.u - 0.4).abs() < 1e-15);
        assert!((r.err - 0.6).abs() < 1e-15);
        assert!((r.pct - 60.0).abs() < 1e-12);
    }

    #[test]
    fn nine_cases() {
        let rows = discontinuity_probe();
        assert_eq!(rows.len(), 9);
        assert!((rows[0].u - 0.81908).abs() < 1e-12);
        assert!((rows[8].u - 0.8).abs() < 1e-15);
    }
}
