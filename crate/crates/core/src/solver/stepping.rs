//! Time-step selection and the run loop.

use std::io::Write;

use crate::error::{Error, Result};
use crate::solver::rk::{ssp_rk3_step, Conserved, RkWorkspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DtMode {
    /// `Δt = CFL·Δx/α`.
    FixedCfl,
    /// CFL number `Δx^{2/3}`, so `Δt = Δx^{5/3}/α`.
    AccuracyCfl,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeStepping {
    pub cfl: f64,
    pub mode: DtMode,
}

impl TimeStepping {
    pub fn fixed(cfl: f64) -> Self {
        TimeStepping {
            cfl,
            mode: DtMode::FixedCfl,
        }
    }

    pub fn accuracy() -> Self {
        TimeStepping {
            cfl: 1.0,
            mode: DtMode::AccuracyCfl,
        }
    }

    fn cfl_number(&self, h: f64) -> f64 {
        match self.mode {
            DtMode::FixedCfl => self.cfl,
            DtMode::AccuracyCfl => h.powf(2.0 / 3.0),
        }
    }

    pub fn dt_1d(&self, dx: f64, alpha: f64) -> f64 {
        self.cfl_number(dx) * dx / alpha
    }

    pub fn dt_2d(&self, dx: f64, dy: f64, alpha_x: f64, alpha_y: f64) -> f64 {
        self.cfl_number(dx.min(dy)) / (alpha_x / dx + alpha_y / dy)
    }
}

/// Where the integrator is when a right-hand side is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StageContext {
    /// Time at the start of the step.
    pub t: f64,
    pub step: usize,
    pub stage: usize,
    /// True on the step that lands on `t_end`.
    pub final_step: bool,
}

/// Global maximum wave speeds, frozen over one step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveSpeeds {
    pub x: f64,
    pub y: f64,
}

impl WaveSpeeds {
    pub fn max(&self) -> f64 {
        self.x.max(self.y)
    }
}

/// A spatial discretization `du/dt = L(u)`.
pub trait Semidiscrete {
    type Field: Conserved;

    fn fill_ghosts(&self, u: &mut Self::Field) -> Result<()>;

    /// Errors from here are reported as state errors at the current step.
    fn wave_speeds(&self, u: &Self::Field) -> Result<WaveSpeeds>;

    fn stable_dt(&self, u: &Self::Field, speeds: &WaveSpeeds, ts: &TimeStepping) -> f64;

    /// Writes `L(u)` into the interior cells of `out`; ghosts of `u` are filled.
    fn rhs(&mut self, u: &Self::Field, speeds: &WaveSpeeds, ctx: &StageContext, out: &mut [f64]);
}

/// Called after every completed step.
pub trait StepHook<F> {
    fn after_step(&mut self, _step: usize, _t: f64, _u: &F) {}
}

impl<F> StepHook<F> for () {}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RunControl {
    /// Emit `step,t,dt,alpha` to stderr every this many steps.
    pub progress_every: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunStats {
    pub steps: usize,
    pub t: f64,
    pub max_alpha: f64,
}

fn as_state_error(step: usize, e: Error) -> Error {
    match e {
        Error::State { message, .. } => Error::state(step, message),
        Error::Data(message) => Error::state(step, message),
        other => other,
    }
}

/// Steps `u` from `t0` to exactly `t_end`.
pub fn advance_to<S, H>(
    sys: &mut S,
    u: &mut S::Field,
    t0: f64,
    t_end: f64,
    ts: &TimeStepping,
    hook: &mut H,
    control: &RunControl,
) -> Result<RunStats>
where
    S: Semidiscrete,
    H: StepHook<S::Field>,
{
    if !(t_end >= t0) {
        return Err(Error::config("t_end", format!("t_end = {t_end} is before t0 = {t0}")));
    }
    let mut t = t0;
    let mut step = 0;
    let mut max_alpha: f64 = 0.0;
    let mut ws = RkWorkspace::new(u);
    let stderr = std::io::stderr();
    while t < t_end {
        sys.fill_ghosts(u).map_err(|e| as_state_error(step, e))?;
        let speeds = sys.wave_speeds(u).map_err(|e| as_state_error(step, e))?;
        if !(speeds.max() > 0.0) {
            return Err(Error::state(step, "zero maximum wave speed"));
        }
        max_alpha = max_alpha.max(speeds.max());
        let mut dt = sys.stable_dt(u, &speeds, ts);
        let final_step = t + dt >= t_end;
        if final_step {
            dt = t_end - t;
        }
        let mut ctx = StageContext {
            t,
            step,
            stage: 0,
            final_step,
        };
        ssp_rk3_step(u, dt, &mut ws, |f, stage, out| {
            if stage > 0 {
                sys.fill_ghosts(f)?;
            }
            ctx.stage = stage;
            sys.rhs(f, &speeds, &ctx, out);
            Ok(())
        })
        .map_err(|e| as_state_error(step, e))?;
        step += 1;
        t = if final_step { t_end } else { t + dt };
        if u.values().iter().any(|v| !v.is_finite()) {
            return Err(Error::state(step, "non-finite value after step"));
        }
        hook.after_step(step, t, u);
        if let Some(every) = control.progress_every {
            if every > 0 && (step % every == 0 || final_step) {
                let _ = writeln!(stderr.lock(), "{step},{t:.10e},{dt:.6e},{:.6e}", speeds.max());
            }
        }
    }
    if step > 0 {
        sys.fill_ghosts(u).map_err(|e| as_state_error(step, e))?;
    }
    Ok(RunStats {
        steps: step,
        t,
        max_alpha,
    })
}
