//! Time integration and semi-discrete right-hand sides.

pub mod advection;
pub mod euler;
pub mod flux;
pub mod rk;
pub mod stepping;

pub use advection::{advection_rhs_1d, Advection1D, Bias, InterfaceEvent, InterfaceObserver, NoObserver};
pub use euler::{euler_eigensystem, euler_rhs_2d, CharAverage, Direction, Euler2D, EulerEigenSystem};
pub use flux::{euler_wave_speeds, lax_friedrichs, GasConstants};
pub use rk::{ssp_rk3_step, Conserved, RkWorkspace};
pub use stepping::{
    advance_to, DtMode, RunControl, RunStats, Semidiscrete, StageContext, StepHook, TimeStepping,
    WaveSpeeds,
};
