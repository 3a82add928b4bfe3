//! Two-dimensional Euler equations with reconstruction in local
//! characteristic variables, dimension by dimension.
//!
//! The y sweep reuses the x-direction routine on states whose momentum
//! components are swapped, so the two directions share every arithmetic
//! operation.

use crate::error::{Error, Result};
use crate::kernel::reconstruct_left;
use crate::mapping::{MapVisitor, MappingSpec, WeightMap};
use crate::mesh::{Boundaries2D, CellField2D};
use crate::solver::flux::{euler_wave_speeds, GasConstants};
use crate::solver::stepping::{Semidiscrete, StageContext, TimeStepping, WaveSpeeds};

pub type State = [f64; 4];
pub type Matrix = [[f64; 4]; 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    X,
    Y,
}

/// How the interface state for the eigenvectors is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharAverage {
    /// Arithmetic mean of the two primitive states.
    Mean,
    Roe,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerEigenSystem {
    /// Rows are left eigenvectors.
    pub left: Matrix,
    /// Columns are right eigenvectors.
    pub right: Matrix,
    pub lambda: [f64; 4],
    pub direction: Direction,
}

#[inline(always)]
fn swap_uv(q: &State) -> State {
    [q[0], q[2], q[1], q[3]]
}

/// Interface state `(u, v, H, c)` in the x frame.
#[inline(always)]
fn interface_state(gas: &GasConstants, a: &State, b: &State, avg: CharAverage) -> Option<[f64; 4]> {
    let g = gas.gamma;
    let pa = gas.primitive(a);
    let pb = gas.primitive(b);
    match avg {
        CharAverage::Mean => {
            let rho = 0.5 * (pa[0] + pb[0]);
            let u = 0.5 * (pa[1] + pb[1]);
            let v = 0.5 * (pa[2] + pb[2]);
            let p = 0.5 * (pa[3] + pb[3]);
            if !(rho > 0.0 && p > 0.0) {
                return None;
            }
            let e = p / (g - 1.0) + 0.5 * rho * (u * u + v * v);
            Some([u, v, (e + p) / rho, (g * p / rho).sqrt()])
        }
        CharAverage::Roe => {
            if !(pa[0] > 0.0 && pb[0] > 0.0 && pa[3] > 0.0 && pb[3] > 0.0) {
                return None;
            }
            let (sa, sb) = (pa[0].sqrt(), pb[0].sqrt());
            let w = 1.0 / (sa + sb);
            let u = (sa * pa[1] + sb * pb[1]) * w;
            let v = (sa * pa[2] + sb * pb[2]) * w;
            let ha = (a[3] + pa[3]) / pa[0];
            let hb = (b[3] + pb[3]) / pb[0];
            let h = (sa * ha + sb * hb) * w;
            let c2 = (g - 1.0) * (h - 0.5 * (u * u + v * v));
            if !(c2 > 0.0) {
                return None;
            }
            Some([u, v, h, c2.sqrt()])
        }
    }
}

#[inline(always)]
fn eigen_x(gas: &GasConstants, s: [f64; 4]) -> (Matrix, Matrix) {
    let [u, v, h, c] = s;
    let q2 = u * u + v * v;
    let b1 = (gas.gamma - 1.0) / (c * c);
    let b2 = 0.5 * b1 * q2;
    let right = [
        [1.0, 1.0, 0.0, 1.0],
        [u - c, u, 0.0, u + c],
        [v, v, 1.0, v],
        [h - u * c, 0.5 * q2, v, h + u * c],
    ];
    let left = [
        [
            0.5 * (b2 + u / c),
            0.5 * (-b1 * u - 1.0 / c),
            -0.5 * b1 * v,
            0.5 * b1,
        ],
        [1.0 - b2, b1 * u, b1 * v, -b1],
        [-v, 0.0, 1.0, 0.0],
        [
            0.5 * (b2 - u / c),
            0.5 * (-b1 * u + 1.0 / c),
            -0.5 * b1 * v,
            0.5 * b1,
        ],
    ];
    (left, right)
}

/// Eigenvectors of the flux Jacobian in `direction` at the interface state of
/// two conserved states.
pub fn euler_eigensystem(
    gas: &GasConstants,
    a: &State,
    b: &State,
    direction: Direction,
    avg: CharAverage,
) -> Result<EulerEigenSystem> {
    let (a, b) = match direction {
        Direction::X => (*a, *b),
        Direction::Y => (swap_uv(a), swap_uv(b)),
    };
    let s = interface_state(gas, &a, &b, avg)
        .ok_or_else(|| Error::state(0, "nonphysical interface state"))?;
    let (mut left, mut right) = eigen_x(gas, s);
    if direction == Direction::Y {
        // rows of L act on swapped states; columns of R produce swapped states
        let (l, r) = (left, right);
        for k in 0..4 {
            left[k] = [l[k][0], l[k][2], l[k][1], l[k][3]];
        }
        right = [r[0], r[2], r[1], r[3]];
    }
    Ok(EulerEigenSystem {
        left,
        right,
        lambda: [s[0] - s[3], s[0], s[0], s[0] + s[3]],
        direction,
    })
}

#[inline(always)]
fn matvec(m: &Matrix, x: &State) -> State {
    let mut y = [0.0; 4];
    for i in 0..4 {
        y[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2] + m[i][3] * x[3];
    }
    y
}

struct LineScheme<W> {
    gas: GasConstants,
    map: W,
    eps: f64,
    avg: CharAverage,
}

impl<W: WeightMap> LineScheme<W> {
    /// x-frame numerical flux at the face between `q[2]` and `q[3]`.
    #[inline]
    fn face_flux(&self, q: &[State; 6], alpha: f64) -> Option<State> {
        let s = interface_state(&self.gas, &q[2], &q[3], self.avg)?;
        let (l, r) = eigen_x(&self.gas, s);
        let w: [State; 6] = [
            matvec(&l, &q[0]),
            matvec(&l, &q[1]),
            matvec(&l, &q[2]),
            matvec(&l, &q[3]),
            matvec(&l, &q[4]),
            matvec(&l, &q[5]),
        ];
        let mut wm = [0.0; 4];
        let mut wp = [0.0; 4];
        for k in 0..4 {
            wm[k] = reconstruct_left(&[w[0][k], w[1][k], w[2][k], w[3][k], w[4][k]], &self.map, self.eps);
            wp[k] = reconstruct_left(&[w[5][k], w[4][k], w[3][k], w[2][k], w[1][k]], &self.map, self.eps);
        }
        let um = matvec(&r, &wm);
        let up = matvec(&r, &wp);
        let fm = self.gas.flux_x(&um);
        let fp = self.gas.flux_x(&up);
        let mut f = [0.0; 4];
        for k in 0..4 {
            f[k] = 0.5 * (fm[k] + fp[k] - alpha * (up[k] - um[k]));
        }
        Some(f)
    }
}

/// Euler right-hand side. Ghosts of `field` must be filled; on failure
/// returns the interior cell `(i, j)` of the first nonphysical interface state.
pub fn euler_rhs_2d(
    field: &CellField2D,
    gas: &GasConstants,
    spec: &MappingSpec,
    eps: f64,
    avg: CharAverage,
    speeds: &WaveSpeeds,
    out: &mut [f64],
) -> std::result::Result<(), (usize, usize)> {
    spec.dispatch(Pass {
        field,
        gas: *gas,
        eps,
        avg,
        speeds: *speeds,
        out,
    })
}

struct Pass<'a> {
    field: &'a CellField2D,
    gas: GasConstants,
    eps: f64,
    avg: CharAverage,
    speeds: WaveSpeeds,
    out: &'a mut [f64],
}

impl MapVisitor for Pass<'_> {
    type Output = std::result::Result<(), (usize, usize)>;

    fn visit<W: WeightMap>(self, map: W) -> Self::Output {
        let Pass {
            field,
            gas,
            eps,
            avg,
            speeds,
            out,
        } = self;
        let scheme = LineScheme { gas, map, eps, avg };
        let grid = field.grid;
        let (nx, ny, g) = (grid.nx(), grid.ny(), grid.n_ghost());
        let rs = grid.row_stride();
        let block = grid.block();
        let d = &field.data;
        let load = |idx: usize| -> State { [d[idx], d[block + idx], d[2 * block + idx], d[3 * block + idx]] };

        let mut fluxes: Vec<State> = vec![[0.0; 4]; nx.max(ny) + 1];

        let inv_dx = 1.0 / grid.dx();
        for j in 0..ny {
            let row = (j + g) * rs;
            for face in 0..=nx {
                let p = row + g + face;
                let q = [load(p - 3), load(p - 2), load(p - 1), load(p), load(p + 1), load(p + 2)];
                fluxes[face] = scheme.face_flux(&q, speeds.x).ok_or((face, j))?;
            }
            for i in 0..nx {
                let idx = row + g + i;
                for c in 0..4 {
                    out[c * block + idx] = -(fluxes[i + 1][c] - fluxes[i][c]) * inv_dx;
                }
            }
        }

        let inv_dy = 1.0 / grid.dy();
        for i in 0..nx {
            let col = g + i;
            for face in 0..=ny {
                let p = (g + face) * rs + col;
                let q = [
                    swap_uv(&load(p - 3 * rs)),
                    swap_uv(&load(p - 2 * rs)),
                    swap_uv(&load(p - rs)),
                    swap_uv(&load(p)),
                    swap_uv(&load(p + rs)),
                    swap_uv(&load(p + 2 * rs)),
                ];
                fluxes[face] = swap_uv(&scheme.face_flux(&q, speeds.y).ok_or((i, face))?);
            }
            for j in 0..ny {
                let idx = (g + j) * rs + col;
                for c in 0..4 {
                    out[c * block + idx] += -(fluxes[j + 1][c] - fluxes[j][c]) * inv_dy;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Euler2D {
    pub spec: MappingSpec,
    pub eps: f64,
    pub gas: GasConstants,
    pub bc: Boundaries2D,
    pub avg: CharAverage,
    /// Set when a right-hand side met a nonphysical interface state.
    pub failure: Option<String>,
}

impl Euler2D {
    pub fn new(spec: MappingSpec, eps: f64, bc: Boundaries2D) -> Self {
        Euler2D {
            spec,
            eps,
            gas: GasConstants::default(),
            bc,
            avg: CharAverage::Mean,
            failure: None,
        }
    }
}

impl Semidiscrete for Euler2D {
    type Field = CellField2D;

    fn fill_ghosts(&self, u: &mut CellField2D) -> Result<()> {
        if let Some(msg) = &self.failure {
            return Err(Error::state(0, msg.clone()));
        }
        u.fill_ghosts(self.bc)
    }

    fn wave_speeds(&self, u: &CellField2D) -> Result<WaveSpeeds> {
        let (x, y) = euler_wave_speeds(u, &self.gas)?;
        Ok(WaveSpeeds { x, y })
    }

    fn stable_dt(&self, u: &CellField2D, s: &WaveSpeeds, ts: &TimeStepping) -> f64 {
        ts.dt_2d(u.grid.dx(), u.grid.dy(), s.x, s.y)
    }

    fn rhs(&mut self, u: &CellField2D, speeds: &WaveSpeeds, ctx: &StageContext, out: &mut [f64]) {
        if self.failure.is_some() {
            return;
        }
        if let Err((i, j)) = euler_rhs_2d(u, &self.gas, &self.spec, self.eps, self.avg, speeds, out) {
            self.failure = Some(format!(
                "nonphysical interface state near cell ({i}, {j}) at stage {}",
                ctx.stage
            ));
            out.iter_mut().for_each(|v| *v = f64::NAN);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{BoundaryKind, Grid2D};

    fn mul(a: &Matrix, b: &Matrix) -> Matrix {
        let mut c = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                c[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    }

    fn assert_identity(m: &Matrix, tol: f64) {
        for i in 0..4 {
            for j in 0..4 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((m[i][j] - e).abs() < tol, "{m:?}");
            }
        }
    }

    #[test]
    fn eigenvalues_at_rest() {
        let gas = GasConstants::default();
        let q = gas.conserved(&[1.0, 0.0, 0.0, 1.0]);
        for avg in [CharAverage::Mean, CharAverage::Roe] {
            let e = euler_eigensystem(&gas, &q, &q, Direction::X, avg).unwrap();
            let c = 1.4f64.sqrt();
            assert_eq!(e.lambda, [-c, 0.0, 0.0, c]);
            assert_identity(&mul(&e.left, &e.right), 1e-12);
        }
    }

    #[test]
    fn eigenvectors_diagonalize_the_jacobian() {
        // finite-difference Jacobian of the x flux at a generic state
        let gas = GasConstants::default();
        let q = gas.conserved(&[0.8, 0.3, -0.4, 1.2]);
        let e = euler_eigensystem(&gas, &q, &q, Direction::X, CharAverage::Mean).unwrap();
        let h = 1e-6;
        for k in 0..4 {
            let rk: State = [e.right[0][k], e.right[1][k], e.right[2][k], e.right[3][k]];
            let plus: State = std::array::from_fn(|i| q[i] + h * rk[i]);
            let minus: State = std::array::from_fn(|i| q[i] - h * rk[i]);
            let (fp, fm) = (gas.flux_x(&plus), gas.flux_x(&minus));
            for i in 0..4 {
                let jr = (fp[i] - fm[i]) / (2.0 * h);
                assert!((jr - e.lambda[k] * rk[i]).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn y_system_is_the_swapped_x_system() {
        let gas = GasConstants::default();
        let a = gas.conserved(&[1.1, 0.2, 0.7, 1.0]);
        let b = gas.conserved(&[0.9, -0.1, 0.5, 0.8]);
        let ey = euler_eigensystem(&gas, &a, &b, Direction::Y, CharAverage::Mean).unwrap();
        let ex = euler_eigensystem(&gas, &swap_uv(&a), &swap_uv(&b), Direction::X, CharAverage::Mean)
            .unwrap();
        assert_eq!(ey.lambda, ex.lambda);
        for i in 0..4 {
            for j in 0..4 {
                let p = [0, 2, 1, 3];
                assert_eq!(ey.left[i][j], ex.left[i][p[j]]);
                assert_eq!(ey.right[i][j], ex.right[p[i]][j]);
            }
        }
        assert_identity(&mul(&ey.left, &ey.right), 1e-12);
    }

    fn uniform_field(n: usize, w: [f64; 4]) -> CellField2D {
        let gas = GasConstants::default();
        let grid = Grid2D::new((0.0, 1.0), (0.0, 1.0), n, n, 3).unwrap();
        let mut f = CellField2D::zeros(grid, 4);
        let q = gas.conserved(&w);
        for j in 0..n {
            for i in 0..n {
                for c in 0..4 {
                    f.set(c, i, j, q[c]);
                }
            }
        }
        f
    }

    #[test]
    fn uniform_state_is_steady() {
        let mut f = uniform_field(8, [1.0, 0.3, -0.2, 0.9]);
        f.fill_ghosts(Boundaries2D::uniform(BoundaryKind::Periodic)).unwrap();
        let mut out = vec![0.0; f.data.len()];
        let speeds = WaveSpeeds { x: 1.5, y: 1.5 };
        for spec in MappingSpec::all_schemes() {
            euler_rhs_2d(&f, &GasConstants::default(), &spec, 1e-6, CharAverage::Mean, &speeds, &mut out)
                .unwrap();
            assert!(out.iter().all(|v| v.abs() < 1e-12));
        }
    }
}
