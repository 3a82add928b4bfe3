//! Runs described by a [`RunConfig`]: single simulations with their
//! artifacts, error sweeps, and plot-ready CSV extraction.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::diagnostics::io::{
    read_csv, snapshot_1d, snapshot_2d, write_csv, CsvRecord, CurvePoint, Sample1D, Sample2D,
};
use crate::diagnostics::{
    error_norms, error_rows, increased_error_pct, local_extremum_overshoot, overshoot_metric,
    slice_y, ErrorNorms, ErrorRow, MappingTrace, NonOpRecord, NonOpScanner, Schedule, TraceRecord,
};
use crate::error::{Error, Result};
use crate::mapping::MappingSpec;
use crate::mesh::{Boundaries2D, CellField1D, CellField2D};
use crate::problems::{
    exact_advection, ic_riemann2d_config4, ic_shock_vortex, initial_1d, ProblemKind, ProblemSpec,
    ShockVortexSpec,
};
use crate::solver::{advance_to, Advection1D, Euler2D, GasConstants, RunControl, RunStats};

#[derive(Debug, Clone)]
pub enum Solution {
    OneD(CellField1D),
    TwoD(CellField2D),
}

/// Everything a single simulation produced.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub scheme: String,
    pub mapping: MappingSpec,
    pub n: usize,
    pub stats: RunStats,
    pub solution: Solution,
    /// Present when the problem has an exact solution.
    pub errors: Option<ErrorNorms>,
    pub nonop: Option<NonOpScanner>,
    pub trace: Vec<TraceRecord>,
    /// 1D: `(above upper bound, below lower bound)`; 2D: largest new local
    /// extremum of the density slice, reported in the first slot.
    pub overshoot: Option<(f64, f64)>,
    pub runtime_s: f64,
}

impl RunOutcome {
    pub fn nonop_count(&self) -> Option<u64> {
        self.nonop.as_ref().map(|s| s.count)
    }
}

fn control(cfg: &RunConfig) -> RunControl {
    RunControl {
        progress_every: cfg.progress,
    }
}

/// Runs one `(scheme, N)` pair in memory.
pub fn simulate(cfg: &RunConfig, scheme: &str, n: usize) -> Result<RunOutcome> {
    cfg.validate()?;
    let spec = cfg.problem_spec()?;
    let mapping = cfg.params.build(scheme)?;
    let started = Instant::now();
    let mut out = match spec.kind {
        ProblemKind::Advection(profile) => simulate_1d(cfg, &spec, mapping, profile, n)?,
        ProblemKind::RiemannConfig4 | ProblemKind::ShockVortex => simulate_2d(cfg, &spec, mapping, n)?,
    };
    out.scheme = scheme.to_string();
    out.runtime_s = started.elapsed().as_secs_f64();
    Ok(out)
}

fn simulate_1d(
    cfg: &RunConfig,
    spec: &ProblemSpec,
    mapping: MappingSpec,
    profile: crate::problems::Profile1D,
    n: usize,
) -> Result<RunOutcome> {
    let grid = spec.grid_1d(n)?;
    let mut u = initial_1d(profile, grid)?;
    let scanner = NonOpScanner {
        count_schedule: if cfg.nonop { Schedule::EveryStage } else { Schedule::Never },
        record_schedule: cfg.nonop_records,
        ..NonOpScanner::default()
    };
    let trace = (cfg.trace != Schedule::Never).then(|| MappingTrace::new(cfg.trace));
    let mut sys = Advection1D::periodic(mapping, cfg.eps).with_observer((scanner, trace));
    let stats = advance_to(&mut sys, &mut u, 0.0, spec.t_end, &spec.stepping, &mut (), &control(cfg))?;
    let (scanner, trace) = sys.observer;
    let exact = exact_advection(profile, spec.t_end, grid)?;
    let errors = Some(error_norms(&u, &exact)?);
    let overshoot = cfg.overshoot.then(|| {
        let (lo, hi) = profile.bounds();
        overshoot_metric(u.interior(0), lo, hi)
    });
    let tracks_nonop = cfg.nonop || cfg.nonop_records != Schedule::Never;
    Ok(RunOutcome {
        scheme: String::new(),
        mapping,
        n,
        stats,
        solution: Solution::OneD(u),
        errors,
        nonop: tracks_nonop.then_some(scanner),
        trace: trace.map(|t| t.records).unwrap_or_default(),
        overshoot,
        runtime_s: 0.0,
    })
}

fn simulate_2d(cfg: &RunConfig, spec: &ProblemSpec, mapping: MappingSpec, n: usize) -> Result<RunOutcome> {
    let grid = spec.grid_2d(n)?;
    let gas = GasConstants { gamma: cfg.gamma };
    let mut u = match spec.kind {
        ProblemKind::RiemannConfig4 => ic_riemann2d_config4(grid, &gas)?,
        _ => ic_shock_vortex(grid, &ShockVortexSpec::default(), &gas)?,
    };
    let mut sys = Euler2D::new(mapping, cfg.eps, Boundaries2D::uniform(spec.boundary));
    sys.gas = gas;
    sys.avg = cfg.char_average;
    let stats = advance_to(&mut sys, &mut u, 0.0, spec.t_end, &spec.stepping, &mut (), &control(cfg))?;
    let overshoot = match (cfg.overshoot, spec.slice_y) {
        (true, Some(y)) => {
            let rho: Vec<f64> = slice_y(&u, 0, y).into_iter().map(|(_, r)| r).collect();
            Some((local_extremum_overshoot(&rho), 0.0))
        }
        _ => None,
    };
    Ok(RunOutcome {
        scheme: String::new(),
        mapping,
        n,
        stats,
        solution: Solution::TwoD(u),
        errors: None,
        nonop: None,
        trace: Vec::new(),
        overshoot,
        runtime_s: 0.0,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NonOpSummary {
    pub count: u64,
    pub records: usize,
    pub fallbacks: u64,
    pub unique_locations: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OvershootSummary {
    pub above: f64,
    pub below: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorSummary {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

/// Contents of `summary.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub problem: String,
    pub preset: String,
    pub scheme: String,
    pub scheme_label: String,
    pub n: usize,
    pub t_end: f64,
    pub steps: usize,
    pub max_alpha: f64,
    pub runtime_s: f64,
    pub errors: Option<ErrorSummary>,
    pub nonop: Option<NonOpSummary>,
    pub overshoot: Option<OvershootSummary>,
}

impl RunSummary {
    pub fn from_outcome(cfg: &RunConfig, o: &RunOutcome) -> Self {
        RunSummary {
            problem: cfg.problem.clone(),
            preset: cfg.preset.name().to_string(),
            scheme: o.scheme.clone(),
            scheme_label: o.mapping.to_string(),
            n: o.n,
            t_end: o.stats.t,
            steps: o.stats.steps,
            max_alpha: o.stats.max_alpha,
            runtime_s: o.runtime_s,
            errors: o.errors.map(|e| ErrorSummary {
                l1: e.l1,
                l2: e.l2,
                linf: e.linf,
            }),
            nonop: o.nonop.as_ref().map(|s| NonOpSummary {
                count: s.count,
                records: s.records.len(),
                fallbacks: s.fallbacks,
                unique_locations: s.unique_locations(),
            }),
            overshoot: o.overshoot.map(|(above, below)| OvershootSummary { above, below }),
        }
    }
}

/// Directory of one `(scheme, N)` run below the output root.
pub fn run_dir(cfg: &RunConfig, scheme: &str, n: usize) -> PathBuf {
    cfg.out.join(format!("{}-{scheme}-N{n}", cfg.problem))
}

/// Runs one pair and writes `solution.csv`, `nonop.csv`, `trace.csv`,
/// `summary.json` and the canonical `config.txt` into `dir`.
pub fn run_single(cfg: &RunConfig, scheme: &str, n: usize, dir: &Path) -> Result<RunOutcome> {
    let o = simulate(cfg, scheme, n)?;
    std::fs::create_dir_all(dir)?;
    match &o.solution {
        Solution::OneD(u) => write_csv(&dir.join("solution.csv"), &snapshot_1d(u))?,
        Solution::TwoD(u) => {
            write_csv(&dir.join("solution.csv"), &snapshot_2d(u, &GasConstants { gamma: cfg.gamma }))?
        }
    }
    if let Some(s) = &o.nonop {
        write_csv(&dir.join("nonop.csv"), &s.records)?;
    }
    if cfg.trace != Schedule::Never {
        write_csv(&dir.join("trace.csv"), &o.trace)?;
    }
    let summary = RunSummary::from_outcome(cfg, &o);
    std::fs::write(dir.join("summary.json"), serde_json::to_string_pretty(&summary)?)?;
    std::fs::write(dir.join("config.txt"), cfg.to_text())?;
    Ok(o)
}

/// Every `(scheme, N)` pair of the configuration, each in its own directory.
pub fn run_all(cfg: &RunConfig) -> Result<Vec<RunOutcome>> {
    cfg.validate()?;
    let spec = cfg.problem_spec()?;
    let mut out = Vec::new();
    for scheme in &cfg.schemes {
        for &n in &spec.resolutions {
            out.push(run_single(cfg, scheme, n, &run_dir(cfg, scheme, n))?);
        }
    }
    Ok(out)
}

/// Errors of one scheme relative to the reference scheme at the same N.
#[derive(Debug, Clone, PartialEq)]
pub struct IncreasedRow {
    pub scheme: String,
    pub n: usize,
    pub pct: [Option<f64>; 3],
}

impl CsvRecord for IncreasedRow {
    const HEADER: &'static [&'static str] = &["scheme", "N", "L1_pct", "L2_pct", "Linf_pct"];

    fn to_fields(&self) -> Vec<String> {
        let f = |v: Option<f64>| v.map(crate::diagnostics::io::fmt_f64).unwrap_or_default();
        vec![self.scheme.clone(), self.n.to_string(), f(self.pct[0]), f(self.pct[1]), f(self.pct[2])]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        let p = |s: &str| -> Result<Option<f64>> {
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse()
                    .map(Some)
                    .map_err(|_| Error::Data(format!("cannot parse {s:?} as a number")))
            }
        };
        Ok(IncreasedRow {
            scheme: f[0].to_string(),
            n: f[1].parse().map_err(|_| Error::Data(format!("bad N {:?}", f[1])))?,
            pct: [p(f[2])?, p(f[3])?, p(f[4])?],
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub rows: Vec<ErrorRow>,
    pub increased: Option<Vec<IncreasedRow>>,
}

pub fn increased_rows(rows: &[ErrorRow], reference: &str) -> Vec<IncreasedRow> {
    rows.iter()
        .map(|r| {
            let base = rows.iter().find(|b| b.scheme == reference && b.n == r.n);
            let pct = match base {
                Some(b) => {
                    let (x, y) = (r.norms.as_array(), b.norms.as_array());
                    [0, 1, 2].map(|k| increased_error_pct(x[k], y[k]))
                }
                None => [None; 3],
            };
            IncreasedRow {
                scheme: r.scheme.clone(),
                n: r.n,
                pct,
            }
        })
        .collect()
}

/// In-memory sweep: one error row per `(scheme, N)`.
pub fn sweep(cfg: &RunConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let spec = cfg.problem_spec()?;
    if !spec.has_exact {
        return Err(Error::config("problem", format!("'{}' has no exact solution to sweep against", spec.name)));
    }
    let mut rows = Vec::new();
    for scheme in &cfg.schemes {
        let mut runs = Vec::new();
        for &n in &spec.resolutions {
            let o = simulate(cfg, scheme, n)?;
            runs.push((n, o.errors.expect("advection runs carry errors")));
        }
        rows.extend(error_rows(scheme, &runs));
    }
    let increased = cfg.reference.as_deref().map(|r| increased_rows(&rows, r));
    Ok(SweepReport { rows, increased })
}

/// Sweep that also writes `errors.csv` and, with a reference, `increased.csv`.
pub fn run_sweep(cfg: &RunConfig) -> Result<SweepReport> {
    let report = sweep(cfg)?;
    write_csv(&cfg.out.join("errors.csv"), &report.rows)?;
    if let Some(inc) = &report.increased {
        write_csv(&cfg.out.join("increased.csv"), inc)?;
    }
    Ok(report)
}

/// Kinds of plot-ready CSV files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    Solution,
    MappingCurve,
    TraceScatter,
    NonOpOverlay,
    Slice2D,
}

impl PlotKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "solution" => PlotKind::Solution,
            "mapping-curve" => PlotKind::MappingCurve,
            "trace-scatter" => PlotKind::TraceScatter,
            "nonop-overlay" => PlotKind::NonOpOverlay,
            "slice-2d" => PlotKind::Slice2D,
            _ => {
                return Err(Error::config(
                    "kind",
                    format!("unknown plot kind '{s}' (solution, mapping-curve, trace-scatter, nonop-overlay, slice-2d)"),
                ))
            }
        })
    }
}

/// Inputs for [`emit_plotdata`]; which fields matter depends on the kind.
#[derive(Debug, Clone, Default)]
pub struct PlotInputs {
    /// Directory written by [`run_single`].
    pub run_dir: Option<PathBuf>,
    pub mapping: Option<MappingSpec>,
    pub samples: Option<usize>,
    pub y: Option<f64>,
}

/// `x, u` and, where available, the exact solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionPoint {
    pub x: f64,
    pub u: f64,
    pub exact: f64,
}

impl CsvRecord for SolutionPoint {
    const HEADER: &'static [&'static str] = &["x", "u", "exact"];

    fn to_fields(&self) -> Vec<String> {
        use crate::diagnostics::io::fmt_f64;
        vec![fmt_f64(self.x), fmt_f64(self.u), fmt_f64(self.exact)]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        let p = |s: &str| s.parse::<f64>().map_err(|_| Error::Data(format!("bad number {s:?}")));
        Ok(SolutionPoint { x: p(f[0])?, u: p(f[1])?, exact: p(f[2])? })
    }
}

/// A non-OP record placed on the solution curve.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlayPoint {
    pub x: f64,
    pub u: f64,
    pub bias: String,
    pub pair: String,
}

impl CsvRecord for OverlayPoint {
    const HEADER: &'static [&'static str] = &["x", "u", "bias", "pair"];

    fn to_fields(&self) -> Vec<String> {
        use crate::diagnostics::io::fmt_f64;
        vec![fmt_f64(self.x), fmt_f64(self.u), self.bias.clone(), self.pair.clone()]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        let p = |s: &str| s.parse::<f64>().map_err(|_| Error::Data(format!("bad number {s:?}")));
        Ok(OverlayPoint { x: p(f[0])?, u: p(f[1])?, bias: f[2].to_string(), pair: f[3].to_string() })
    }
}

/// Density along one row of cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlicePoint {
    pub x: f64,
    pub rho: f64,
}

impl CsvRecord for SlicePoint {
    const HEADER: &'static [&'static str] = &["x", "rho"];

    fn to_fields(&self) -> Vec<String> {
        use crate::diagnostics::io::fmt_f64;
        vec![fmt_f64(self.x), fmt_f64(self.rho)]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        let p = |s: &str| s.parse::<f64>().map_err(|_| Error::Data(format!("bad number {s:?}")));
        Ok(SlicePoint { x: p(f[0])?, rho: p(f[1])? })
    }
}

/// `(s, ω, g)` grouped by substencil, then by ω.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterPoint {
    pub s: usize,
    pub omega: f64,
    pub g: f64,
}

impl CsvRecord for ScatterPoint {
    const HEADER: &'static [&'static str] = &["s", "omega", "g"];

    fn to_fields(&self) -> Vec<String> {
        use crate::diagnostics::io::fmt_f64;
        vec![self.s.to_string(), fmt_f64(self.omega), fmt_f64(self.g)]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        let p = |s: &str| s.parse::<f64>().map_err(|_| Error::Data(format!("bad number {s:?}")));
        Ok(ScatterPoint {
            s: f[0].parse().map_err(|_| Error::Data(format!("bad index {:?}", f[0])))?,
            omega: p(f[1])?,
            g: p(f[2])?,
        })
    }
}

/// `samples` equally spaced `ω ∈ [0, 1]` with `g_s(ω)` for each substencil.
pub fn mapping_curve(spec: &MappingSpec, samples: usize) -> Vec<CurvePoint> {
    let m = samples.max(2) - 1;
    (0..=m)
        .map(|i| {
            let omega = i as f64 / m as f64;
            CurvePoint {
                omega,
                g: [0, 1, 2].map(|s| spec.map(s, omega)),
            }
        })
        .collect()
}

fn require_file(dir: &Path, name: &str) -> Result<PathBuf> {
    let p = dir.join(name);
    if !p.is_file() {
        return Err(Error::config("input", format!("missing input file {}", p.display())));
    }
    Ok(p)
}

fn read_summary(dir: &Path) -> Result<RunSummary> {
    let text = std::fs::read_to_string(require_file(dir, "summary.json")?)?;
    Ok(serde_json::from_str(&text)?)
}

/// Densities of the row of cells containing `y` in a row-major 2D snapshot.
pub fn slice_from_samples(samples: &[Sample2D], y: f64) -> Vec<SlicePoint> {
    let mut ys: Vec<f64> = samples.iter().map(|s| s.y).collect();
    ys.sort_by(f64::total_cmp);
    ys.dedup();
    if ys.is_empty() {
        return Vec::new();
    }
    let dy = if ys.len() > 1 { ys[1] - ys[0] } else { 1.0 };
    let k = ((y - (ys[0] - 0.5 * dy)) / dy).floor().max(0.0) as usize;
    let row = ys[k.min(ys.len() - 1)];
    samples
        .iter()
        .filter(|s| s.y == row)
        .map(|s| SlicePoint { x: s.x, rho: s.rho })
        .collect()
}

/// Writes one plot-ready CSV to `out` and returns its row count.
pub fn emit_plotdata(kind: PlotKind, inputs: &PlotInputs, out: &Path) -> Result<usize> {
    let need_dir = || {
        inputs
            .run_dir
            .as_deref()
            .ok_or_else(|| Error::config("input", "a run directory is required"))
    };
    match kind {
        PlotKind::MappingCurve => {
            let spec = inputs
                .mapping
                .ok_or_else(|| Error::config("scheme", "a scheme is required"))?;
            let rows = mapping_curve(&spec, inputs.samples.unwrap_or(1001));
            write_csv(out, &rows)?;
            Ok(rows.len())
        }
        PlotKind::Solution => {
            let dir = need_dir()?;
            let summary = read_summary(dir)?;
            let u: Vec<Sample1D> = read_csv(&require_file(dir, "solution.csv")?)?;
            let spec = crate::problems::registry_lookup(&summary.problem, crate::problems::Preset::parse(&summary.preset)?)?;
            let ProblemKind::Advection(profile) = spec.kind else {
                return Err(Error::config("input", "solution plots are for 1D runs; use slice-2d"));
            };
            let exact = exact_advection(profile, summary.t_end, spec.grid_1d(u.len())?)?;
            let rows: Vec<SolutionPoint> = u
                .iter()
                .zip(exact.interior(0))
                .map(|(s, &e)| SolutionPoint { x: s.x, u: s.u, exact: e })
                .collect();
            write_csv(out, &rows)?;
            Ok(rows.len())
        }
        PlotKind::TraceScatter => {
            let dir = need_dir()?;
            let mut t: Vec<TraceRecord> = read_csv(&require_file(dir, "trace.csv")?)?;
            t.sort_by(|a, b| a.s.cmp(&b.s).then(a.omega.total_cmp(&b.omega)));
            let rows: Vec<ScatterPoint> = t
                .iter()
                .map(|r| ScatterPoint { s: r.s, omega: r.omega, g: r.g })
                .collect();
            write_csv(out, &rows)?;
            Ok(rows.len())
        }
        PlotKind::NonOpOverlay => {
            let dir = need_dir()?;
            let u: Vec<Sample1D> = read_csv(&require_file(dir, "solution.csv")?)?;
            let recs: Vec<NonOpRecord> = read_csv(&require_file(dir, "nonop.csv")?)?;
            let rows: Vec<OverlayPoint> = recs
                .iter()
                .filter_map(|r| {
                    u.iter().find(|s| s.x == r.x).map(|s| OverlayPoint {
                        x: r.x,
                        u: s.u,
                        bias: r.bias.label().to_string(),
                        pair: format!("{}-{}", r.pair.0, r.pair.1),
                    })
                })
                .collect();
            write_csv(out, &rows)?;
            Ok(rows.len())
        }
        PlotKind::Slice2D => {
            let dir = need_dir()?;
            let y = inputs.y.ok_or_else(|| Error::config("y", "a slice position is required"))?;
            let samples: Vec<Sample2D> = read_csv(&require_file(dir, "solution.csv")?)?;
            let rows = slice_from_samples(&samples, y);
            write_csv(out, &rows)?;
            Ok(rows.len())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;
    use crate::mapping::MOP_PLATEAUS;

    #[test]
    fn zero_duration_run_has_zero_error() {
        let cfg = parse_config("problem=slp scheme=mop N=200 t_end=0").unwrap();
        let o = simulate(&cfg, "mop-acmk", 200).unwrap();
        assert_eq!(o.errors.unwrap().as_array(), [0.0; 3]);
        assert_eq!(o.stats.steps, 0);
    }

    #[test]
    fn mop_curve_has_three_plateaus() {
        let c = mapping_curve(&MappingSpec::mop_default(), 1001);
        assert_eq!(c.len(), 1001);
        // strictly inside (CFS0, CFS1) only the plateau values occur
        for p in c.iter().filter(|p| p.omega > 0.01 && p.omega < 0.94) {
            for g in p.g {
                assert!(MOP_PLATEAUS.contains(&g), "g({}) = {g}", p.omega);
            }
        }
        assert_eq!(c[150].g, [0.1; 3]);
        assert_eq!(c[300].g, [0.3; 3]);
        assert_eq!(c[500].g, [0.6; 3]);
    }

    #[test]
    fn increased_rows_against_reference() {
        let e = |x: f64| ErrorNorms { l1: x, l2: x, linf: x };
        let rows = vec![
            ErrorRow { scheme: "mip-acmk".into(), n: 200, norms: e(1.0), orders: [None; 3] },
            ErrorRow { scheme: "js".into(), n: 200, norms: e(3.0), orders: [None; 3] },
        ];
        let inc = increased_rows(&rows, "mip-acmk");
        assert_eq!(inc[0].pct, [Some(0.0); 3]);
        assert_eq!(inc[1].pct, [Some(200.0); 3]);
    }

    #[test]
    fn slice_picks_upper_row_on_a_face() {
        let mk = |x: f64, y: f64| Sample2D { x, y, rho: y, u: 0.0, v: 0.0, p: 1.0 };
        let s: Vec<Sample2D> = [0.125, 0.375, 0.625, 0.875]
            .iter()
            .flat_map(|&y| [mk(0.25, y), mk(0.75, y)])
            .collect();
        let row = slice_from_samples(&s, 0.5);
        assert_eq!(row.len(), 2);
        assert_eq!(row[0].rho, 0.625);
        assert_eq!(slice_from_samples(&s, 0.3)[0].rho, 0.375);
    }

    #[test]
    fn missing_inputs_are_config_errors() {
        let inputs = PlotInputs { run_dir: Some(PathBuf::from("/nonexistent/run")), ..Default::default() };
        let e = emit_plotdata(PlotKind::Solution, &inputs, Path::new("/tmp/x.csv")).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = emit_plotdata(PlotKind::MappingCurve, &PlotInputs::default(), Path::new("/tmp/x.csv")).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }
}
