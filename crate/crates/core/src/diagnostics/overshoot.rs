//! Overshoot measures for bounded solutions and 2D slices.

use crate::mesh::CellField2D;

/// `(max(0, max u − upper), max(0, lower − min u))`.
pub fn overshoot_metric(values: &[f64], lower: f64, upper: f64) -> (f64, f64) {
    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::INFINITY;
    for &v in values {
        hi = hi.max(v);
        lo = lo.min(v);
    }
    ((hi - upper).max(0.0), (lower - lo).max(0.0))
}

/// Largest excursion of an interior sample outside the range spanned by its
/// two neighbours, i.e. the height of the tallest new local extremum.
pub fn local_extremum_overshoot(values: &[f64]) -> f64 {
    values
        .windows(3)
        .map(|w| {
            let lo = w[0].min(w[2]);
            let hi = w[0].max(w[2]);
            (w[1] - hi).max(lo - w[1]).max(0.0)
        })
        .fold(0.0, f64::max)
}

/// Cell row whose `y` range contains `y`; for a plane on a face the upper
/// row is taken.
pub fn slice_row(field: &CellField2D, y: f64) -> usize {
    let gy = &field.grid.y;
    let k = ((y - gy.x_left) / gy.dx).floor();
    (k.max(0.0) as usize).min(gy.n_cells - 1)
}

/// `(x_i, component c)` along the row containing `y`.
pub fn slice_y(field: &CellField2D, c: usize, y: f64) -> Vec<(f64, f64)> {
    let j = slice_row(field, y);
    (0..field.grid.nx())
        .map(|i| (field.grid.x.center(i), field.get(c, i, j)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::Grid2D;

    #[test]
    fn metric_examples() {
        assert_eq!(overshoot_metric(&[0.0, 0.5, 1.0], 0.0, 1.0), (0.0, 0.0));
        let (o, u) = overshoot_metric(&[-0.01, 1.02], 0.0, 1.0);
        assert!((o - 0.02).abs() < 1e-15 && (u - 0.01).abs() < 1e-15);
    }

    #[test]
    fn local_extrema() {
        assert_eq!(local_extremum_overshoot(&[0.0, 1.0, 2.0, 3.0]), 0.0);
        assert_eq!(local_extremum_overshoot(&[0.0, 1.5, 1.0, 1.0]), 0.5);
        assert_eq!(local_extremum_overshoot(&[1.0, 0.75, 1.0]), 0.25);
    }

    #[test]
    fn slice_takes_upper_row_on_a_face() {
        let grid = Grid2D::new((0.0, 1.0), (0.0, 1.0), 8, 8, 3).unwrap();
        let mut f = CellField2D::zeros(grid, 1);
        f.set(0, 1, 4, 7.0);
        assert_eq!(slice_row(&f, 0.5), 4);
        assert_eq!(slice_row(&f, 0.3), 2);
        assert_eq!(slice_row(&f, 1.0), 7);
        assert_eq!(slice_y(&f, 0, 0.5)[1], (0.1875, 7.0));
    }
}
