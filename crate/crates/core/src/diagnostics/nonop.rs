//! Detection of non-order-preserving mapping events during a run.

use crate::kernel::Triple;
use crate::mapping::{is_nonop_instance, NONOP_TOLERANCE};
use crate::solver::advection::{Bias, InterfaceEvent, InterfaceObserver};
use crate::solver::stepping::StageContext;

/// When an interface observer acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Schedule {
    Never,
    EveryStage,
    /// First RK stage of the step that lands on the output time.
    FinalStepFirstStage,
}

impl Schedule {
    pub fn matches(&self, ctx: &StageContext) -> bool {
        match self {
            Schedule::Never => false,
            Schedule::EveryStage => true,
            Schedule::FinalStepFirstStage => ctx.final_step && ctx.stage == 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonOpRecord {
    pub t: f64,
    pub step: usize,
    pub stage: usize,
    /// Center of the stencil's middle cell.
    pub x: f64,
    pub bias: Bias,
    /// JS weights before mapping.
    pub omega: Triple,
    /// Raw mapped values `g_s(ω_s)`.
    pub mapped: Triple,
    pub pair: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct NonOpScanner {
    pub tolerance: f64,
    pub count_schedule: Schedule,
    pub record_schedule: Schedule,
    /// Non-OP instances seen under `count_schedule`.
    pub count: u64,
    /// Reconstructions whose mapped weights all vanished.
    pub fallbacks: u64,
    pub records: Vec<NonOpRecord>,
}

impl Default for NonOpScanner {
    fn default() -> Self {
        NonOpScanner {
            tolerance: NONOP_TOLERANCE,
            count_schedule: Schedule::EveryStage,
            record_schedule: Schedule::FinalStepFirstStage,
            count: 0,
            fallbacks: 0,
            records: Vec::new(),
        }
    }
}

impl NonOpScanner {
    /// Distinct record positions in ascending order.
    pub fn unique_locations(&self) -> Vec<f64> {
        let mut xs: Vec<f64> = self.records.iter().map(|r| r.x).collect();
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        xs
    }
}

impl InterfaceObserver for NonOpScanner {
    fn observe(&mut self, ctx: &StageContext, e: &InterfaceEvent) {
        if e.rec.fallback {
            self.fallbacks += 1;
        }
        let count = self.count_schedule.matches(ctx);
        let record = self.record_schedule.matches(ctx);
        if !(count || record) {
            return;
        }
        if let Some(pair) = is_nonop_instance(&e.rec.omega_js, &e.rec.mapped, self.tolerance) {
            if count {
                self.count += 1;
            }
            if record {
                self.records.push(NonOpRecord {
                    t: ctx.t,
                    step: ctx.step,
                    stage: ctx.stage,
                    x: e.x,
                    bias: e.bias,
                    omega: e.rec.omega_js,
                    mapped: e.rec.mapped,
                    pair,
                });
            }
        }
    }
}
