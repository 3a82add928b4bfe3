//! Semi-discrete linear advection `u_t + u_x = 0` in conservative form.

use crate::error::Result;
use crate::kernel::{reconstruct_pair_detailed, Reconstruction, Window};
use crate::mapping::{MapVisitor, MappingSpec, WeightMap};
use crate::mesh::{BoundaryKind, CellField1D};
use crate::solver::flux::advection_wave_speed;
use crate::solver::stepping::{Semidiscrete, StageContext, TimeStepping, WaveSpeeds};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bias {
    /// `u⁻` at `x_{j+1/2}` from cells `j-2..j+2`.
    Left,
    /// `u⁺` at `x_{j-1/2}` from cells `j-2..j+2`.
    Right,
}

impl Bias {
    pub fn label(&self) -> &'static str {
        match self {
            Bias::Left => "-",
            Bias::Right => "+",
        }
    }
}

/// One reconstruction, reported once per interior cell and bias.
#[derive(Debug, Clone, Copy)]
pub struct InterfaceEvent {
    /// Zero-based interior index of the stencil's center cell.
    pub cell: usize,
    /// Center of that cell.
    pub x: f64,
    pub bias: Bias,
    pub rec: Reconstruction,
}

pub trait InterfaceObserver {
    fn observe(&mut self, ctx: &StageContext, event: &InterfaceEvent);
}

/// Observer that ignores everything.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoObserver;

impl InterfaceObserver for NoObserver {
    #[inline(always)]
    fn observe(&mut self, _: &StageContext, _: &InterfaceEvent) {}
}

impl<A: InterfaceObserver, B: InterfaceObserver> InterfaceObserver for (A, B) {
    fn observe(&mut self, ctx: &StageContext, event: &InterfaceEvent) {
        self.0.observe(ctx, event);
        self.1.observe(ctx, event);
    }
}

impl<O: InterfaceObserver> InterfaceObserver for Option<O> {
    fn observe(&mut self, ctx: &StageContext, event: &InterfaceEvent) {
        if let Some(o) = self {
            o.observe(ctx, event);
        }
    }
}

/// Writes `-(ĥ_{j+1/2} - ĥ_{j-1/2})/Δx` into the interior of `out`, with
/// `ĥ` the Lax–Friedrichs flux of the two biased reconstructions.
/// Ghosts of `field` must be filled.
pub fn advection_rhs_1d<O: InterfaceObserver>(
    field: &CellField1D,
    spec: &MappingSpec,
    eps: f64,
    alpha: f64,
    ctx: &StageContext,
    observer: &mut O,
    out: &mut [f64],
) {
    spec.dispatch(Pass {
        field,
        eps,
        alpha,
        ctx,
        observer,
        out,
    })
}

struct Pass<'a, O> {
    field: &'a CellField1D,
    eps: f64,
    alpha: f64,
    ctx: &'a StageContext,
    observer: &'a mut O,
    out: &'a mut [f64],
}

impl<O: InterfaceObserver> MapVisitor for Pass<'_, O> {
    type Output = ();

    fn visit<W: WeightMap>(self, map: W) {
        let Pass {
            field,
            eps,
            alpha,
            ctx,
            observer,
            out,
        } = self;
        let grid = field.grid;
        let (n, g) = (grid.n_cells, grid.n_ghost);
        let u = field.component(0);
        let inv_dx = 1.0 / grid.dx;
        // stored cell c yields u⁻ at its right face and u⁺ at its left face
        let mut prev_minus = 0.0;
        let mut prev_flux = 0.0;
        for c in g - 1..=g + n {
            let w: Window = [u[c - 2], u[c - 1], u[c], u[c + 1], u[c + 2]];
            let (minus, plus) = reconstruct_pair_detailed(&w, &map, eps);
            if c > g - 1 {
                let (a, b) = (prev_minus, plus.value);
                let flux = 0.5 * (a + b - alpha * (b - a));
                if c > g {
                    out[c - 1] = -(flux - prev_flux) * inv_dx;
                }
                prev_flux = flux;
            }
            if c >= g && c < g + n {
                let cell = c - g;
                let x = grid.center(cell);
                observer.observe(ctx, &InterfaceEvent { cell, x, bias: Bias::Left, rec: minus });
                observer.observe(ctx, &InterfaceEvent { cell, x, bias: Bias::Right, rec: plus });
            }
            prev_minus = minus.value;
        }
    }
}

/// Linear advection with a given weight mapping and boundary kinds.
#[derive(Debug, Clone)]
pub struct Advection1D<O = NoObserver> {
    pub spec: MappingSpec,
    pub eps: f64,
    pub left: BoundaryKind,
    pub right: BoundaryKind,
    pub observer: O,
}

impl Advection1D<NoObserver> {
    pub fn periodic(spec: MappingSpec, eps: f64) -> Self {
        Advection1D {
            spec,
            eps,
            left: BoundaryKind::Periodic,
            right: BoundaryKind::Periodic,
            observer: NoObserver,
        }
    }
}

impl<O> Advection1D<O> {
    pub fn with_observer<P>(self, observer: P) -> Advection1D<P> {
        Advection1D {
            spec: self.spec,
            eps: self.eps,
            left: self.left,
            right: self.right,
            observer,
        }
    }
}

impl<O: InterfaceObserver> Semidiscrete for Advection1D<O> {
    type Field = CellField1D;

    fn fill_ghosts(&self, u: &mut CellField1D) -> Result<()> {
        u.fill_ghosts(self.left, self.right)
    }

    fn wave_speeds(&self, _: &CellField1D) -> Result<WaveSpeeds> {
        Ok(WaveSpeeds {
            x: advection_wave_speed(),
            y: 0.0,
        })
    }

    fn stable_dt(&self, u: &CellField1D, speeds: &WaveSpeeds, ts: &TimeStepping) -> f64 {
        ts.dt_1d(u.grid.dx, speeds.x)
    }

    fn rhs(&mut self, u: &CellField1D, speeds: &WaveSpeeds, ctx: &StageContext, out: &mut [f64]) {
        advection_rhs_1d(u, &self.spec, self.eps, speeds.x, ctx, &mut self.observer, out);
    }
}
