//! Error norms, convergence orders and increased-error percentages.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mesh::CellField1D;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorNorms {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

impl ErrorNorms {
    pub fn as_array(&self) -> [f64; 3] {
        [self.l1, self.l2, self.linf]
    }
}

/// `L1 = hΣ|e|`, `L2 = √(hΣe²)`, `L∞ = max|e|`.
pub fn norms_of(numeric: &[f64], exact: &[f64], h: f64) -> ErrorNorms {
    let mut l1 = 0.0;
    let mut l2 = 0.0;
    let mut linf: f64 = 0.0;
    for (a, b) in numeric.iter().zip(exact) {
        let e = (a - b).abs();
        l1 += e;
        l2 += e * e;
        linf = linf.max(e);
    }
    ErrorNorms {
        l1: h * l1,
        l2: (h * l2).sqrt(),
        linf,
    }
}

pub fn error_norms(numeric: &CellField1D, exact: &CellField1D) -> Result<ErrorNorms> {
    if numeric.grid != exact.grid {
        return Err(Error::config("N", "numeric and exact fields live on different grids"));
    }
    Ok(norms_of(numeric.interior(0), exact.interior(0), numeric.grid.dx))
}

/// `log₂(e_N / e_{2N})` for consecutive entries; absent when either error is zero.
pub fn convergence_orders(errors: &[f64]) -> Vec<Option<f64>> {
    errors
        .windows(2)
        .map(|w| {
            if w[0] > 0.0 && w[1] > 0.0 {
                Some((w[0] / w[1]).log2())
            } else {
                None
            }
        })
        .collect()
}

/// `(x − ref)/ref × 100`; absent when `ref = 0`.
pub fn increased_error_pct(err_x: f64, err_ref: f64) -> Option<f64> {
    if err_ref == 0.0 {
        None
    } else {
        Some((err_x - err_ref) / err_ref * 100.0)
    }
}

/// One line of an error table.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    pub scheme: String,
    pub n: usize,
    pub norms: ErrorNorms,
    /// Orders against the previous row of the same scheme (L1, L2, L∞).
    pub orders: [Option<f64>; 3],
}

/// Rows for one scheme; orders only where the resolution doubled.
pub fn error_rows(scheme: &str, runs: &[(usize, ErrorNorms)]) -> Vec<ErrorRow> {
    runs.iter()
        .enumerate()
        .map(|(i, &(n, norms))| {
            let mut orders = [None; 3];
            if i > 0 && runs[i - 1].0 * 2 == n {
                let prev = runs[i - 1].1.as_array();
                let cur = norms.as_array();
                for k in 0..3 {
                    orders[k] = convergence_orders(&[prev[k], cur[k]])[0];
                }
            }
            ErrorRow {
                scheme: scheme.to_string(),
                n,
                norms,
                orders,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_examples() {
        let n = norms_of(&[0.1, -0.3], &[0.0, 0.0], 0.5);
        assert!((n.l1 - 0.2).abs() < 1e-15);
        assert!((n.l2 - 0.05f64.sqrt()).abs() < 1e-15);
        assert_eq!(n.linf, 0.3);
        let z = norms_of(&[1.0, 2.0], &[1.0, 2.0], 0.1);
        assert_eq!(z.as_array(), [0.0; 3]);
    }

    #[test]
    fn order_examples() {
        assert_eq!(convergence_orders(&[1e-2, 3.125e-4]), vec![Some(5.0)]);
        assert_eq!(convergence_orders(&[0.3, 0.3]), vec![Some(0.0)]);
        assert_eq!(convergence_orders(&[0.0, 0.3]), vec![None]);
        let p = convergence_orders(&[2.96529e-3, 9.27609e-5])[0].unwrap();
        assert!((p - 4.9985).abs() < 5e-5);
    }

    #[test]
    fn increased_error_examples() {
        assert_eq!(increased_error_pct(2e-2, 1e-2), Some(100.0));
        assert_eq!(increased_error_pct(1e-2, 1e-2), Some(0.0));
        assert_eq!(increased_error_pct(1.0, 0.0), None);
        let p = increased_error_pct(3.87826e-5, 8.43356e-6).unwrap();
        assert!((p - 359.86).abs() < 5e-3);
    }

    #[test]
    fn rows_skip_non_doubling_orders() {
        let e = |x: f64| ErrorNorms { l1: x, l2: x, linf: x };
        let rows = error_rows("js", &[(10, e(1.0)), (20, e(0.5)), (30, e(0.1))]);
        assert_eq!(rows[0].orders, [None; 3]);
        assert_eq!(rows[1].orders, [Some(1.0); 3]);
        assert_eq!(rows[2].orders, [None; 3]);
    }
}
