use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use weno_core::config::{canonical_scheme_name, parse_config, SchemeParams};
use weno_core::diagnostics::{discontinuity_probe, write_csv};
use weno_core::experiment::{emit_plotdata, run_all, run_sweep, PlotInputs, PlotKind};
use weno_core::mapping::classify_op_set;
use weno_core::{Error, Result};

#[derive(Parser)]
#[command(name = "weno", about = "Mapped WENO experiments and diagnostics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every (scheme, N) pair of a configuration and write its artifacts.
    Run { config: PathBuf },
    /// Error table with convergence orders for every scheme and resolution.
    Sweep { config: PathBuf },
    /// Extract plot-ready CSV data.
    Plotdata {
        /// solution, mapping-curve, trace-scatter, nonop-overlay or slice-2d
        kind: String,
        /// Run directory written by `weno run`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Scheme for mapping-curve.
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long, default_value_t = 1001)]
        samples: usize,
        /// Plane for slice-2d.
        #[arg(long)]
        y: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the isolated-discontinuity weight probe table.
    Probe {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a scheme's mapping is order-preserving.
    Classify {
        scheme: String,
        #[arg(long, default_value_t = 2001)]
        samples: usize,
    },
}

fn read_config(path: &PathBuf) -> Result<weno_core::config::RunConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::config("config", format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

fn fmt_opt(v: Option<f64>, prec: usize) -> String {
    v.map(|x| format!("{x:.prec$}")).unwrap_or_else(|| "-".into())
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run { config } => {
            let cfg = read_config(&config)?;
            for o in run_all(&cfg)? {
                let err = o
                    .errors
                    .map(|e| format!(" L1={:.5e} L2={:.5e} Linf={:.5e}", e.l1, e.l2, e.linf))
                    .unwrap_or_default();
                let nonop = o.nonop_count().map(|c| format!(" nonop={c}")).unwrap_or_default();
                let over = o
                    .overshoot
                    .map(|(a, b)| format!(" overshoot={:.3e}/{:.3e}", a, b))
                    .unwrap_or_default();
                println!(
                    "{} N={} steps={} t={}{err}{nonop}{over} ({:.2}s)",
                    o.mapping, o.n, o.stats.steps, o.stats.t, o.runtime_s
                );
            }
        }
        Command::Sweep { config } => {
            let cfg = read_config(&config)?;
            let report = run_sweep(&cfg)?;
            println!("scheme        N      L1           order   L2           order   Linf         order");
            for r in &report.rows {
                println!(
                    "{:<12} {:>5}  {:.5e}  {:>6}  {:.5e}  {:>6}  {:.5e}  {:>6}",
                    r.scheme,
                    r.n,
                    r.norms.l1,
                    fmt_opt(r.orders[0], 4),
                    r.norms.l2,
                    fmt_opt(r.orders[1], 4),
                    r.norms.linf,
                    fmt_opt(r.orders[2], 4)
                );
            }
            if let Some(inc) = &report.increased {
                println!("increased errors vs {}:", cfg.reference.as_deref().unwrap_or(""));
                for r in inc {
                    println!(
                        "{:<12} {:>5}  {:>8}%  {:>8}%  {:>8}%",
                        r.scheme,
                        r.n,
                        fmt_opt(r.pct[0], 2),
                        fmt_opt(r.pct[1], 2),
                        fmt_opt(r.pct[2], 2)
                    );
                }
            }
            println!("wrote {}", cfg.out.join("errors.csv").display());
        }
        Command::Plotdata { kind, input, scheme, samples, y, out } => {
            let kind = PlotKind::parse(&kind)?;
            let mapping = scheme
                .map(|s| SchemeParams::default().build(canonical_scheme_name(&s)?))
                .transpose()?;
            let inputs = PlotInputs {
                run_dir: input,
                mapping,
                samples: Some(samples),
                y,
            };
            let rows = emit_plotdata(kind, &inputs, &out)?;
            println!("wrote {rows} rows to {}", out.display());
        }
        Command::Probe { out } => {
            let rows = discontinuity_probe();
            println!("{:<8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>7}", "case", "w0", "w1", "w2", "u", "err", "pct");
            for r in &rows {
                println!(
                    "{:<8} {:>8.5} {:>8.5} {:>8.5} {:>8.5} {:>8.5} {:>6.2}%",
                    r.label, r.weights[0], r.weights[1], r.weights[2], r.u, r.err, r.pct
                );
            }
            if let Some(path) = out {
                write_csv(&path, &rows)?;
            }
        }
        Command::Classify { scheme, samples } => {
            let spec = SchemeParams::default().build(canonical_scheme_name(&scheme)?)?;
            let v = classify_op_set(&spec, samples)?;
            if v.is_op() {
                println!("{spec}: OP ({} samples, no violations)", v.sample_count);
            } else {
                println!(
                    "{spec}: non-OP ({} violations over {} samples)",
                    v.violations, v.sample_count
                );
                for w in &v.witnesses {
                    println!(
                        "  g_{}({:.6}) = {:.6} vs g_{}({:.6}) = {:.6}",
                        w.m, w.omega_a, w.g_a, w.n, w.omega_b, w.g_b
                    );
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
