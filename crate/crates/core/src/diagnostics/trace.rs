//! Sampling of `(ω_s, g_s(ω_s))` pairs as they occur in a run.

use crate::diagnostics::nonop::Schedule;
use crate::solver::advection::{InterfaceEvent, InterfaceObserver};
use crate::solver::stepping::StageContext;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRecord {
    pub t: f64,
    pub x: f64,
    pub s: usize,
    pub omega: f64,
    pub g: f64,
}

#[derive(Debug, Clone)]
pub struct MappingTrace {
    pub schedule: Schedule,
    pub records: Vec<TraceRecord>,
}

impl MappingTrace {
    pub fn new(schedule: Schedule) -> Self {
        MappingTrace {
            schedule,
            records: Vec::new(),
        }
    }
}

impl Default for MappingTrace {
    fn default() -> Self {
        Self::new(Schedule::FinalStepFirstStage)
    }
}

impl InterfaceObserver for MappingTrace {
    fn observe(&mut self, ctx: &StageContext, e: &InterfaceEvent) {
        if !self.schedule.matches(ctx) {
            return;
        }
        for s in 0..3 {
            self.records.push(TraceRecord {
                t: ctx.t,
                x: e.x,
                s,
                omega: e.rec.omega_js[s],
                g: e.rec.mapped[s],
            });
        }
    }
}
