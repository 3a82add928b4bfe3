//! Post-processing and in-run observers: error norms, non-OP detection,
//! mapping traces, the discontinuity probe, overshoot, and CSV output.

pub mod io;
pub mod nonop;
pub mod norms;
pub mod overshoot;
pub mod probe;
pub mod trace;

pub use io::{read_csv, write_csv, CsvRecord, CurvePoint, Sample1D, Sample2D};
pub use nonop::{NonOpRecord, NonOpScanner, Schedule};
pub use norms::{convergence_orders, error_norms, error_rows, increased_error_pct, norms_of, ErrorNorms, ErrorRow};
pub use overshoot::{local_extremum_overshoot, overshoot_metric, slice_y};
pub use probe::{discontinuity_probe, probe_row, ProbeRow, PROBE_CASES};
pub use trace::{MappingTrace, TraceRecord};
