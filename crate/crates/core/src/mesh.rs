//! Uniform structured grids, cell-averaged fields with ghost layers, and
//! boundary fills.
//!
//! Storage order is fixed: a field holds each conserved component as one
//! contiguous block. Inside a 1D block cells run left to right including
//! ghosts; inside a 2D block rows run bottom to top and each row runs left
//! to right, ghosts included (row-major over `(component, y, x)`).

use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;

/// Ghost width required by the five-point stencils plus the right-biased
/// reconstruction at the last interface.
pub const GHOST_WIDTH: usize = 3;

/// Smallest number of interior cells that can host a five-point stencil.
pub const MIN_CELLS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    Periodic,
    /// Zeroth-order extrapolation: ghosts copy the nearest interior cell.
    Transmissive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub x_left: f64,
    pub x_right: f64,
    pub n_cells: usize,
    pub dx: f64,
    pub n_ghost: usize,
}

impl Grid1D {
    pub fn new(x_left: f64, x_right: f64, n_cells: usize, n_ghost: usize) -> Result<Self> {
        if !(x_left.is_finite() && x_right.is_finite()) || x_right <= x_left {
            return Err(Error::config(
                "domain",
                format!("invalid extents [{x_left}, {x_right}]"),
            ));
        }
        if n_cells < MIN_CELLS {
            return Err(Error::config(
                "N",
                format!("{n_cells} cells is below the stencil width {MIN_CELLS}"),
            ));
        }
        if n_ghost < GHOST_WIDTH {
            return Err(Error::config(
                "n_ghost",
                format!("ghost width {n_ghost} < {GHOST_WIDTH}"),
            ));
        }
        Ok(Grid1D {
            x_left,
            x_right,
            n_cells,
            dx: (x_right - x_left) / n_cells as f64,
            n_ghost,
        })
    }

    pub fn len(&self) -> f64 {
        self.x_right - self.x_left
    }

    /// Center of interior cell `j` (zero-based).
    pub fn center(&self, j: usize) -> f64 {
        self.x_left + (j as f64 + 0.5) * self.dx
    }

    /// Left edge of interior cell `j` (zero-based).
    pub fn face(&self, j: usize) -> f64 {
        self.x_left + j as f64 * self.dx
    }

    /// Number of stored cells including both ghost layers.
    pub fn stride(&self) -> usize {
        self.n_cells + 2 * self.n_ghost
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    pub x: Grid1D,
    pub y: Grid1D,
}

impl Grid2D {
    pub fn new(
        (x_left, x_right): (f64, f64),
        (y_bottom, y_top): (f64, f64),
        nx: usize,
        ny: usize,
        n_ghost: usize,
    ) -> Result<Self> {
        Ok(Grid2D {
            x: Grid1D::new(x_left, x_right, nx, n_ghost)?,
            y: Grid1D::new(y_bottom, y_top, ny, n_ghost)?,
        })
    }

    pub fn nx(&self) -> usize {
        self.x.n_cells
    }

    pub fn ny(&self) -> usize {
        self.y.n_cells
    }

    pub fn dx(&self) -> f64 {
        self.x.dx
    }

    pub fn dy(&self) -> f64 {
        self.y.dx
    }

    pub fn n_ghost(&self) -> usize {
        self.x.n_ghost
    }

    pub fn row_stride(&self) -> usize {
        self.x.stride()
    }

    /// Stored cells per component, ghosts included.
    pub fn block(&self) -> usize {
        self.x.stride() * self.y.stride()
    }
}

/// Cell averages of `n_comp` conserved quantities on a 1D grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CellField1D {
    pub grid: Grid1D,
    pub n_comp: usize,
    pub data: Vec<f64>,
}

impl CellField1D {
    pub fn zeros(grid: Grid1D, n_comp: usize) -> Self {
        CellField1D {
            grid,
            n_comp,
            data: vec![0.0; n_comp * grid.stride()],
        }
    }

    /// Scalar field from interior values; ghosts start at zero.
    pub fn from_interior(grid: Grid1D, values: &[f64]) -> Result<Self> {
        if values.len() != grid.n_cells {
            return Err(Error::config(
                "N",
                format!("{} values for {} cells", values.len(), grid.n_cells),
            ));
        }
        let mut f = Self::zeros(grid, 1);
        f.interior_mut(0).copy_from_slice(values);
        Ok(f)
    }

    pub fn component(&self, c: usize) -> &[f64] {
        let s = self.grid.stride();
        &self.data[c * s..(c + 1) * s]
    }

    pub fn component_mut(&mut self, c: usize) -> &mut [f64] {
        let s = self.grid.stride();
        &mut self.data[c * s..(c + 1) * s]
    }

    pub fn interior(&self, c: usize) -> &[f64] {
        let g = self.grid.n_ghost;
        &self.component(c)[g..g + self.grid.n_cells]
    }

    pub fn interior_mut(&mut self, c: usize) -> &mut [f64] {
        let g = self.grid.n_ghost;
        let n = self.grid.n_cells;
        &mut self.component_mut(c)[g..g + n]
    }

    pub fn fill_ghosts(&mut self, left: BoundaryKind, right: BoundaryKind) -> Result<()> {
        for c in 0..self.n_comp {
            if self.interior(c).iter().any(|v| !v.is_finite()) {
                return Err(Error::Data(format!("non-finite interior value in component {c}")));
            }
        }
        let (n, g) = (self.grid.n_cells, self.grid.n_ghost);
        for c in 0..self.n_comp {
            fill_line(self.component_mut(c), n, g, 1, left, right);
        }
        Ok(())
    }
}

/// Fills the ghost cells of one strided line of `n` interior cells preceded
/// by `g` ghosts.
pub(crate) fn fill_line(
    data: &mut [f64],
    n: usize,
    g: usize,
    step: usize,
    left: BoundaryKind,
    right: BoundaryKind,
) {
    let at = |i: usize| i * step;
    for k in 0..g {
        // ghost k counts outward from the domain edge
        let lg = g - 1 - k;
        data[at(lg)] = match left {
            BoundaryKind::Periodic => data[at(g + n - 1 - k)],
            BoundaryKind::Transmissive => data[at(g)],
        };
        let rg = g + n + k;
        data[at(rg)] = match right {
            BoundaryKind::Periodic => data[at(g + k)],
            BoundaryKind::Transmissive => data[at(g + n - 1)],
        };
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Boundaries2D {
    pub left: BoundaryKind,
    pub right: BoundaryKind,
    pub bottom: BoundaryKind,
    pub top: BoundaryKind,
}

impl Boundaries2D {
    pub fn uniform(kind: BoundaryKind) -> Self {
        Boundaries2D {
            left: kind,
            right: kind,
            bottom: kind,
            top: kind,
        }
    }
}

/// Cell averages of `n_comp` conserved quantities on a 2D grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CellField2D {
    pub grid: Grid2D,
    pub n_comp: usize,
    pub data: Vec<f64>,
}

impl CellField2D {
    pub fn zeros(grid: Grid2D, n_comp: usize) -> Self {
        CellField2D {
            grid,
            n_comp,
            data: vec![0.0; n_comp * grid.block()],
        }
    }

    /// Storage index of component `c` at stored position `(ix, iy)`
    /// (ghost-inclusive coordinates).
    #[inline]
    pub fn index(&self, c: usize, ix: usize, iy: usize) -> usize {
        c * self.grid.block() + iy * self.grid.row_stride() + ix
    }

    /// Value of component `c` at interior cell `(i, j)` (zero-based).
    pub fn get(&self, c: usize, i: usize, j: usize) -> f64 {
        let g = self.grid.n_ghost();
        self.data[self.index(c, i + g, j + g)]
    }

    pub fn set(&mut self, c: usize, i: usize, j: usize, v: f64) {
        let g = self.grid.n_ghost();
        let k = self.index(c, i + g, j + g);
        self.data[k] = v;
    }

    pub fn interior_values(&self, c: usize) -> impl Iterator<Item = f64> + '_ {
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        (0..ny).flat_map(move |j| (0..nx).map(move |i| self.get(c, i, j)))
    }

    /// Fills x-ghosts on interior rows, then y-ghosts on every column
    /// (ghost columns included), so corner ghosts match a diagonal wrap for
    /// doubly periodic data.
    pub fn fill_ghosts(&mut self, bc: Boundaries2D) -> Result<()> {
        for c in 0..self.n_comp {
            if self.interior_values(c).any(|v| !v.is_finite()) {
                return Err(Error::Data(format!("non-finite interior value in component {c}")));
            }
        }
        let g = self.grid.n_ghost();
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        let rs = self.grid.row_stride();
        let block = self.grid.block();
        for c in 0..self.n_comp {
            let comp = &mut self.data[c * block..(c + 1) * block];
            for iy in g..g + ny {
                fill_line(&mut comp[iy * rs..(iy + 1) * rs], nx, g, 1, bc.left, bc.right);
            }
            for ix in 0..rs {
                fill_line(&mut comp[ix..], ny, g, rs, bc.bottom, bc.top);
            }
        }
        Ok(())
    }
}

/// Breakpoints of `[a, b]` split by the sorted `breaks` that fall strictly inside.
fn split_interval(a: f64, b: f64, breaks: &[f64]) -> Vec<(f64, f64)> {
    let mut pieces = Vec::with_capacity(2);
    // breaks within rounding distance of a cell edge coincide with it
    let tol = 1e-9 * (b - a);
    let mut lo = a;
    for &p in breaks {
        if p > lo + tol && p < b - tol {
            pieces.push((lo, p));
            lo = p;
        }
    }
    pieces.push((lo, b));
    pieces
}

/// Mean of `f` over `[a, b]`, integrating each smooth piece separately.
pub fn piecewise_average<F: Fn(f64) -> f64>(
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    breaks: &[f64],
    f: F,
) -> f64 {
    let h = b - a;
    split_interval(a, b, breaks)
        .into_iter()
        .map(|(lo, hi)| (hi - lo) / h * rule.average(lo, hi, &f))
        .sum()
}

/// Scalar cell averages of a smooth pointwise profile by composite
/// Gauss–Legendre quadrature.
pub fn cell_average_ic<F: Fn(f64) -> f64>(
    grid: Grid1D,
    f: F,
    quadrature_order: usize,
) -> Result<CellField1D> {
    cell_average_piecewise(grid, f, &[], quadrature_order)
}

/// Scalar cell averages of a piecewise-smooth profile. `breaks` lists the
/// points where `f` or its derivatives jump; cells containing one are split
/// there before integrating.
pub fn cell_average_piecewise<F: Fn(f64) -> f64>(
    grid: Grid1D,
    f: F,
    breaks: &[f64],
    quadrature_order: usize,
) -> Result<CellField1D> {
    let rule = GaussLegendre::new(quadrature_order);
    let mut sorted = breaks.to_vec();
    sorted.sort_by(f64::total_cmp);
    let values: Vec<f64> = (0..grid.n_cells)
        .map(|j| {
            let a = grid.face(j);
            piecewise_average(&rule, a, a + grid.dx, &sorted, &f)
        })
        .collect();
    if let Some(j) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::Data(format!("non-finite cell average in cell {j}")));
    }
    CellField1D::from_interior(grid, &values)
}

/// Cell averages of an `M`-component profile on a 2D grid via tensor
/// Gauss–Legendre quadrature, split along the given x and y break lines.
pub fn cell_average_2d<const M: usize, F: Fn(f64, f64) -> [f64; M]>(
    grid: Grid2D,
    f: F,
    x_breaks: &[f64],
    y_breaks: &[f64],
    quadrature_order: usize,
) -> Result<CellField2D> {
    let rule = GaussLegendre::new(quadrature_order);
    let mut field = CellField2D::zeros(grid, M);
    let area = grid.dx() * grid.dy();
    for j in 0..grid.ny() {
        let ya = grid.y.face(j);
        let y_pieces = split_interval(ya, ya + grid.dy(), y_breaks);
        for i in 0..grid.nx() {
            let xa = grid.x.face(i);
            let x_pieces = split_interval(xa, xa + grid.dx(), x_breaks);
            let mut acc = [0.0; M];
            for &(y0, y1) in &y_pieces {
                let (ym, yh) = (0.5 * (y0 + y1), 0.5 * (y1 - y0));
                for &(x0, x1) in &x_pieces {
                    let (xm, xh) = (0.5 * (x0 + x1), 0.5 * (x1 - x0));
                    for (&ny_, &wy) in rule.nodes().iter().zip(rule.weights()) {
                        for (&nx_, &wx) in rule.nodes().iter().zip(rule.weights()) {
                            let v = f(xm + xh * nx_, ym + yh * ny_);
                            let w = wx * wy * xh * yh;
                            for c in 0..M {
                                acc[c] += w * v[c];
                            }
                        }
                    }
                }
            }
            for (c, a) in acc.iter().enumerate() {
                let v = a / area;
                if !v.is_finite() {
                    return Err(Error::Data(format!("non-finite average at cell ({i}, {j})")));
                }
                field.set(c, i, j, v);
            }
        }
    }
    Ok(field)
}
