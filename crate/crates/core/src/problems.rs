//! The test problems: initial data, exact advection solutions and the
//! registry of canonical run parameters.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::mesh::{
    cell_average_2d, cell_average_piecewise, BoundaryKind, CellField1D, CellField2D, Grid1D,
    Grid2D,
};
use crate::solver::flux::GasConstants;
use crate::solver::stepping::TimeStepping;

/// Initial profiles of `u_t + u_x = 0` on the periodic domain `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile1D {
    /// `sin(πx)`.
    Sine,
    /// `sin(πx − sin(πx)/π)`, two first-order critical points.
    SineCritical,
    /// `sin⁹(πx)`.
    Sine9,
    /// Gaussian, square wave, triangle and semi-ellipse.
    Slp,
    /// Plateaus 0, 0.5 and 1 separated by jumps at ±0.2, ±0.4, ±0.6, ±0.8.
    Bicwp,
}

mod slp {
    pub const Z: f64 = -0.7;
    pub const DELTA: f64 = 0.005;
    pub const A: f64 = 0.5;
    pub const ALPHA: f64 = 10.0;

    pub fn beta() -> f64 {
        std::f64::consts::LN_2 / (36.0 * DELTA * DELTA)
    }

    pub fn g(x: f64, beta: f64, z: f64) -> f64 {
        (-beta * (x - z) * (x - z)).exp()
    }

    pub fn f(x: f64, alpha: f64, a: f64) -> f64 {
        (1.0 - alpha * alpha * (x - a) * (x - a)).max(0.0).sqrt()
    }
}

impl Profile1D {
    pub const DOMAIN: (f64, f64) = (-1.0, 1.0);

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Profile1D::Sine => (PI * x).sin(),
            Profile1D::SineCritical => (PI * x - (PI * x).sin() / PI).sin(),
            Profile1D::Sine9 => (PI * x).sin().powi(9),
            Profile1D::Slp => {
                if (-0.8..=-0.6).contains(&x) {
                    let (b, z, d) = (slp::beta(), slp::Z, slp::DELTA);
                    (slp::g(x, b, z - d) + 4.0 * slp::g(x, b, z) + slp::g(x, b, z + d)) / 6.0
                } else if (-0.4..=-0.2).contains(&x) {
                    1.0
                } else if (0.0..=0.2).contains(&x) {
                    1.0 - (10.0 * (x - 0.1)).abs()
                } else if (0.4..=0.6).contains(&x) {
                    let (al, a, d) = (slp::ALPHA, slp::A, slp::DELTA);
                    (slp::f(x, al, a - d) + 4.0 * slp::f(x, al, a) + slp::f(x, al, a + d)) / 6.0
                } else {
                    0.0
                }
            }
            Profile1D::Bicwp => {
                let in_ = |lo: f64, hi: f64| x > lo && x <= hi;
                if in_(-0.6, -0.4) || in_(0.2, 0.4) || in_(0.6, 0.8) {
                    0.5
                } else if in_(-0.8, -0.6) || in_(-0.4, -0.2) || in_(0.4, 0.6) {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Points where the profile or one of its derivatives jumps.
    pub fn breaks(&self) -> Vec<f64> {
        match self {
            Profile1D::Sine | Profile1D::SineCritical | Profile1D::Sine9 => vec![],
            Profile1D::Slp => {
                // the outer ellipses touch zero at a ∓ δ̂ ± 1/α inside [0.4, 0.6]
                vec![-0.8, -0.6, -0.4, -0.2, 0.0, 0.1, 0.2, 0.4, 0.405, 0.595, 0.6]
            }
            Profile1D::Bicwp => vec![-0.8, -0.6, -0.4, -0.2, 0.2, 0.4, 0.6, 0.8],
        }
    }

    /// Gauss–Legendre points per smooth piece of a cell.
    pub fn quadrature_order(&self) -> usize {
        match self {
            Profile1D::Sine | Profile1D::SineCritical | Profile1D::Sine9 => 5,
            Profile1D::Slp => 20,
            Profile1D::Bicwp => 2,
        }
    }

    /// `(lower, upper)` range of the exact solution.
    pub fn bounds(&self) -> (f64, f64) {
        match self {
            Profile1D::Slp | Profile1D::Bicwp => (0.0, 1.0),
            _ => (-1.0, 1.0),
        }
    }
}

fn wrap(x: f64) -> f64 {
    let (a, b) = Profile1D::DOMAIN;
    let len = b - a;
    let y = (x - a).rem_euclid(len) + a;
    if y >= b {
        a
    } else {
        y
    }
}

pub fn initial_1d(profile: Profile1D, grid: Grid1D) -> Result<CellField1D> {
    exact_advection(profile, 0.0, grid)
}

/// Cell averages of the initial profile translated by `t` (period 2).
pub fn exact_advection(profile: Profile1D, t: f64, grid: Grid1D) -> Result<CellField1D> {
    let (a, b) = Profile1D::DOMAIN;
    let shift = t.rem_euclid(b - a);
    let mut breaks: Vec<f64> = profile.breaks().iter().map(|&p| wrap(p + shift)).collect();
    if shift != 0.0 {
        breaks.push(wrap(a + shift));
    }
    let f = |x: f64| profile.eval(if shift == 0.0 { x } else { wrap(x - shift) });
    cell_average_piecewise(grid, f, &breaks, profile.quadrature_order())
}

/// Primitive state `(ρ, u, v, p)` of 2D Riemann configuration 4 at `(x, y)`.
pub fn riemann_c4_state(x: f64, y: f64) -> [f64; 4] {
    match (x >= 0.5, y >= 0.5) {
        (true, true) => [1.1, 0.0, 0.0, 1.1],
        (false, true) => [0.5065, 0.8939, 0.0, 0.35],
        (false, false) => [1.1, 0.8939, 0.8939, 1.1],
        (true, false) => [0.5065, 0.0, 0.8939, 0.35],
    }
}

fn is_face(g: &Grid1D, x: f64) -> bool {
    let k = (x - g.x_left) / g.dx;
    (k - k.round()).abs() < 1e-12
}

pub fn ic_riemann2d_config4(grid: Grid2D, gas: &GasConstants) -> Result<CellField2D> {
    if is_face(&grid.x, 0.5) && is_face(&grid.y, 0.5) {
        // every cell lies in one quadrant: assign states exactly
        let mut f = CellField2D::zeros(grid, 4);
        for j in 0..grid.ny() {
            for i in 0..grid.nx() {
                let q = gas.conserved(&riemann_c4_state(grid.x.center(i), grid.y.center(j)));
                for c in 0..4 {
                    f.set(c, i, j, q[c]);
                }
            }
        }
        Ok(f)
    } else {
        cell_average_2d(grid, |x, y| gas.conserved(&riemann_c4_state(x, y)), &[0.5], &[0.5], 2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShockVortexSpec {
    pub epsilon: f64,
    pub r_c: f64,
    pub alpha: f64,
    pub x_c: f64,
    pub y_c: f64,
    pub p_r: f64,
    pub shock_x: f64,
}

impl Default for ShockVortexSpec {
    fn default() -> Self {
        ShockVortexSpec {
            epsilon: 0.3,
            r_c: 0.05,
            alpha: 0.204,
            x_c: 0.25,
            y_c: 0.5,
            p_r: 1.3,
            shock_x: 0.5,
        }
    }
}

impl ShockVortexSpec {
    pub fn left_state(&self, gas: &GasConstants) -> [f64; 4] {
        [1.0, gas.gamma.sqrt(), 0.0, 1.0]
    }

    pub fn right_state(&self, gas: &GasConstants) -> [f64; 4] {
        let g = gas.gamma;
        let [rho_l, u_l, _, _] = self.left_state(gas);
        let p = self.p_r;
        let rho = rho_l * (g - 1.0 + (g + 1.0) * p) / (g + 1.0 + (g - 1.0) * p);
        let u = u_l * (1.0 - p) / (g - 1.0 + p * (g + 1.0)).sqrt();
        [rho, u, 0.0, p]
    }

    /// `(δρ, δu, δv, δp)` at `(x, y)`.
    pub fn perturbation(&self, gas: &GasConstants, x: f64, y: f64) -> [f64; 4] {
        let g = gas.gamma;
        let [rho_l, _, _, p_l] = self.left_state(gas);
        let (dx, dy) = (x - self.x_c, y - self.y_c);
        let r2 = (dx * dx + dy * dy) / (self.r_c * self.r_c);
        let e = (self.alpha * (1.0 - r2)).exp();
        let dt = -(g - 1.0) * self.epsilon * self.epsilon * e * e / (4.0 * self.alpha * g);
        [
            rho_l * rho_l / ((g - 1.0) * p_l) * dt,
            self.epsilon * dy / self.r_c * e,
            -self.epsilon * dx / self.r_c * e,
            g * rho_l * rho_l / ((g - 1.0) * rho_l) * dt,
        ]
    }

    pub fn state(&self, gas: &GasConstants, x: f64, y: f64) -> [f64; 4] {
        if x < self.shock_x {
            let l = self.left_state(gas);
            let d = self.perturbation(gas, x, y);
            [l[0] + d[0], l[1] + d[1], l[2] + d[2], l[3] + d[3]]
        } else {
            self.right_state(gas)
        }
    }
}

pub fn ic_shock_vortex(grid: Grid2D, spec: &ShockVortexSpec, gas: &GasConstants) -> Result<CellField2D> {
    cell_average_2d(grid, |x, y| gas.conserved(&spec.state(gas, x, y)), &[spec.shock_x], &[], 5)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Advection(Profile1D),
    RiemannConfig4,
    ShockVortex,
}

/// Full-size runs as published, or reduced runs that finish on a desk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    Paper,
    Desk,
}

impl Preset {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Preset::Paper),
            "desk" => Ok(Preset::Desk),
            _ => Err(Error::config("preset", format!("unknown preset '{s}' (paper|desk)"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Paper => "paper",
            Preset::Desk => "desk",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub name: &'static str,
    pub kind: ProblemKind,
    /// 1 or 2.
    pub dimension: usize,
    pub x_domain: (f64, f64),
    pub y_domain: (f64, f64),
    pub boundary: BoundaryKind,
    /// Cells per direction, one run per entry.
    pub resolutions: Vec<usize>,
    pub t_end: f64,
    pub stepping: TimeStepping,
    pub has_exact: bool,
    /// y position of the density slice for plots.
    pub slice_y: Option<f64>,
}

pub const PROBLEM_NAMES: [&str; 10] = [
    "accuracy-sine",
    "accuracy-sine-critical",
    "accuracy-sine9",
    "slp",
    "slp-long",
    "slp-analysis",
    "bicwp",
    "bicwp-long",
    "riemann2d-c4",
    "shock-vortex",
];

fn advection(name: &'static str, p: Profile1D, n: &[usize], t_end: f64, ts: TimeStepping) -> ProblemSpec {
    ProblemSpec {
        name,
        kind: ProblemKind::Advection(p),
        dimension: 1,
        x_domain: Profile1D::DOMAIN,
        y_domain: (0.0, 0.0),
        boundary: BoundaryKind::Periodic,
        resolutions: n.to_vec(),
        t_end,
        stepping: ts,
        has_exact: true,
        slice_y: None,
    }
}

fn euler(name: &'static str, kind: ProblemKind, n: usize, t_end: f64, slice: f64) -> ProblemSpec {
    ProblemSpec {
        name,
        kind,
        dimension: 2,
        x_domain: (0.0, 1.0),
        y_domain: (0.0, 1.0),
        boundary: BoundaryKind::Transmissive,
        resolutions: vec![n],
        t_end,
        stepping: TimeStepping::fixed(0.5),
        has_exact: false,
        slice_y: Some(slice),
    }
}

pub fn registry_lookup(name: &str, preset: Preset) -> Result<ProblemSpec> {
    use Preset::*;
    use Profile1D::*;
    let acc = TimeStepping::accuracy();
    let cfl = TimeStepping::fixed(0.1);
    let sweep = [10, 20, 40, 80, 160, 320];
    let spec = match (name, preset) {
        ("accuracy-sine", _) => advection("accuracy-sine", Sine, &sweep, 2.0, acc),
        ("accuracy-sine-critical", _) => advection("accuracy-sine-critical", SineCritical, &sweep, 2.0, acc),
        ("accuracy-sine9", Paper) => advection("accuracy-sine9", Sine9, &[200], 1000.0, acc),
        ("accuracy-sine9", Desk) => advection("accuracy-sine9", Sine9, &[200], 50.0, acc),
        ("slp", _) => advection("slp", Slp, &[200, 400, 800], 2.0, cfl),
        ("slp-long", Paper) => advection("slp-long", Slp, &[800], 2000.0, cfl),
        ("slp-long", Desk) => advection("slp-long", Slp, &[200], 2000.0, cfl),
        ("slp-analysis", Paper) => advection("slp-analysis", Slp, &[400], 200.0, cfl),
        ("slp-analysis", Desk) => advection("slp-analysis", Slp, &[400], 2.0, cfl),
        ("bicwp", Paper) => advection("bicwp", Bicwp, &[1600, 3200, 6400], 200.0, cfl),
        ("bicwp", Desk) => advection("bicwp", Bicwp, &[1600], 200.0, cfl),
        ("bicwp-long", Paper) => advection("bicwp-long", Bicwp, &[800], 2000.0, cfl),
        ("bicwp-long", Desk) => advection("bicwp-long", Bicwp, &[200], 2000.0, cfl),
        ("riemann2d-c4", Paper) => euler("riemann2d-c4", ProblemKind::RiemannConfig4, 800, 0.25, 0.5),
        ("riemann2d-c4", Desk) => euler("riemann2d-c4", ProblemKind::RiemannConfig4, 200, 0.25, 0.5),
        ("shock-vortex", Paper) => euler("shock-vortex", ProblemKind::ShockVortex, 800, 0.35, 0.65),
        ("shock-vortex", Desk) => euler("shock-vortex", ProblemKind::ShockVortex, 200, 0.35, 0.65),
        _ => {
            return Err(Error::config(
                "problem",
                format!("unknown problem '{name}'; known: {}", PROBLEM_NAMES.join(", ")),
            ))
        }
    };
    Ok(spec)
}

impl ProblemSpec {
    pub fn grid_1d(&self, n: usize) -> Result<Grid1D> {
        Grid1D::new(self.x_domain.0, self.x_domain.1, n, crate::mesh::GHOST_WIDTH)
    }

    pub fn grid_2d(&self, n: usize) -> Result<Grid2D> {
        Grid2D::new(self.x_domain, self.y_domain, n, n, crate::mesh::GHOST_WIDTH)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize) -> Grid1D {
        Grid1D::new(-1.0, 1.0, n, 3).unwrap()
    }

    #[test]
    fn sine_matches_antiderivative() {
        let g = grid(40);
        let f = initial_1d(Profile1D::Sine, g).unwrap();
        let j = 29; // center 0.475
        let (a, b) = (g.face(j), g.face(j + 1));
        let exact = ((PI * a).cos() - (PI * b).cos()) / (PI * g.dx);
        assert!((f.interior(0)[j] - exact).abs() < 1e-13);
    }

    #[test]
    fn sine9_has_zero_mean_and_critical_is_odd() {
        let g = grid(64);
        let f = initial_1d(Profile1D::Sine9, g).unwrap();
        assert!((f.interior(0).iter().sum::<f64>() * g.dx).abs() < 1e-13);
        let f = initial_1d(Profile1D::SineCritical, g).unwrap();
        let u = f.interior(0);
        for j in 0..64 {
            assert!((u[j] + u[63 - j]).abs() < 1e-14);
        }
    }

    #[test]
    fn slp_pieces() {
        let g = grid(200);
        let u = initial_1d(Profile1D::Slp, g).unwrap();
        let u = u.interior(0);
        let at = |x: f64| ((x + 1.0) / g.dx) as usize;
        assert_eq!(u[at(-0.3)], 1.0);
        assert_eq!(u[at(0.8)], 0.0);
        assert_eq!(Profile1D::Slp.eval(0.1), 1.0);
        let apex = u[at(0.1)];
        assert!(apex < 1.0 && apex > 0.9);
        assert!((Profile1D::Slp.eval(-0.7) - (2.0 * 0.5f64.powf(1.0 / 36.0) + 4.0) / 6.0).abs() < 1e-15);
    }

    #[test]
    fn bicwp_plateaus() {
        let p = Profile1D::Bicwp;
        assert_eq!(p.eval(-0.5), 0.5);
        assert_eq!(p.eval(-0.4), 0.5);
        assert_eq!(p.eval(-0.7), 1.0);
        assert_eq!(p.eval(-0.8), 0.0);
        let u = initial_1d(p, grid(800)).unwrap();
        assert!(u.interior(0).iter().all(|&v| v == 0.0 || v == 0.5 || v == 1.0));
    }

    #[test]
    fn exact_solution_translates() {
        let g = grid(400);
        let u0 = initial_1d(Profile1D::Bicwp, g).unwrap();
        assert_eq!(exact_advection(Profile1D::Bicwp, 4.0, g).unwrap(), u0);
        let u = exact_advection(Profile1D::Bicwp, 0.5, g).unwrap();
        let shift = (0.5 / g.dx).round() as usize;
        for j in 0..400 {
            assert_eq!(u.interior(0)[(j + shift) % 400], u0.interior(0)[j]);
        }
    }

    #[test]
    fn riemann_states() {
        let gas = GasConstants::default();
        assert_eq!(riemann_c4_state(0.75, 0.75), [1.1, 0.0, 0.0, 1.1]);
        assert_eq!(riemann_c4_state(0.25, 0.25), [1.1, 0.8939, 0.8939, 1.1]);
        let q = gas.conserved(&riemann_c4_state(0.75, 0.75));
        assert!((q[3] - 2.75).abs() < 1e-14);
        let g = Grid2D::new((0.0, 1.0), (0.0, 1.0), 10, 10, 3).unwrap();
        let f = ic_riemann2d_config4(g, &gas).unwrap();
        for j in 0..10 {
            for i in 0..10 {
                assert_eq!(f.get(0, i, j), f.get(0, j, i));
                assert_eq!(f.get(1, i, j), f.get(2, j, i));
                assert_eq!(f.get(3, i, j), f.get(3, j, i));
            }
        }
    }

    #[test]
    fn shock_vortex_states() {
        let gas = GasConstants::default();
        let s = ShockVortexSpec::default();
        let r = s.right_state(&gas);
        assert!((r[0] - 3.52 / 2.92).abs() < 1e-15);
        assert!((r[0] - 1.205_479_5).abs() < 1e-7);
        assert!((r[1] + 0.189_197_1).abs() < 1e-6);
        assert!((r[1] + 0.3 * 1.4f64.sqrt() / 3.52f64.sqrt()).abs() < 1e-15);
        let d = s.perturbation(&gas, s.x_c, s.y_c);
        assert_eq!((d[1], d[2]), (0.0, -0.0));
        // r = 12: e^{α(1-r²)} ≈ 2e-13
        let d = s.perturbation(&gas, s.x_c + 12.0 * s.r_c, s.y_c);
        assert!(d.iter().map(|v| v.abs()).sum::<f64>() < 1e-10);
    }

    #[test]
    fn registry() {
        let s = registry_lookup("slp-long", Preset::Paper).unwrap();
        assert_eq!((s.resolutions.clone(), s.t_end, s.stepping.cfl), (vec![800], 2000.0, 0.1));
        let s = registry_lookup("riemann2d-c4", Preset::Paper).unwrap();
        assert_eq!((s.resolutions[0], s.t_end, s.stepping.cfl), (800, 0.25, 0.5));
        let s = registry_lookup("accuracy-sine", Preset::Desk).unwrap();
        assert_eq!(s.resolutions, vec![10, 20, 40, 80, 160, 320]);
        assert_eq!(s.stepping.mode, crate::solver::stepping::DtMode::AccuracyCfl);
        for name in PROBLEM_NAMES {
            assert!(registry_lookup(name, Preset::Desk).is_ok());
        }
        assert!(matches!(registry_lookup("nope", Preset::Desk), Err(Error::Config { .. })));
    }
}
