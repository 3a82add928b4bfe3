use std::path::Path;
use std::process::{Command, Output};

use weno_core::diagnostics::io::read_records;
use weno_core::experiment::OverlayPoint;

fn weno(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weno"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("spawn weno")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn probe_prints_all_cases_and_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let o = weno(&["probe", "--out", "probe.csv"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for label in ["C1/JS", "A2/IM", "C3/OP"] {
        assert!(text.contains(label), "{text}");
    }
    let csv = std::fs::read_to_string(dir.path().join("probe.csv")).unwrap();
    assert_eq!(csv.lines().count(), 10);
}

#[test]
fn classify_separates_op_from_non_op() {
    let dir = tempfile::tempdir().unwrap();
    let op = weno(&["classify", "mop"], dir.path());
    assert_eq!(op.status.code(), Some(0));
    assert!(stdout(&op).contains(": OP"));
    let non = weno(&["classify", "pm6", "--samples", "401"], dir.path());
    assert!(stdout(&non).contains("non-OP"));
}

#[test]
fn configuration_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.cfg"), "problem=slp scheme=js bogus=1\n").unwrap();
    let o = weno(&["run", "bad.cfg"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bogus"));

    assert_eq!(weno(&["run", "missing.cfg"], dir.path()).status.code(), Some(2));
    assert_eq!(weno(&["classify", "weno-z"], dir.path()).status.code(), Some(2));
    assert_eq!(weno(&["plotdata", "solution", "--out", "x.csv"], dir.path()).status.code(), Some(2));
}

#[test]
fn run_then_plot_a_short_advection() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("a.cfg"),
        "problem=slp schemes=js,mip N=50 t_end=0.1 out=o\n",
    )
    .unwrap();
    let o = weno(&["run", "a.cfg"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let run = dir.path().join("o/slp-js-N50");
    for f in ["solution.csv", "nonop.csv", "summary.json", "config.txt"] {
        assert!(run.join(f).exists(), "{f}");
    }
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(run.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["nonop"]["count"], 0);

    let p = weno(
        &["plotdata", "nonop-overlay", "--input", "o/slp-js-N50", "--out", "ov.csv"],
        dir.path(),
    );
    assert_eq!(p.status.code(), Some(0));
    let rows: Vec<OverlayPoint> = read_records(std::fs::File::open(dir.path().join("ov.csv")).unwrap()).unwrap();
    assert!(rows.is_empty());

    let p = weno(&["plotdata", "solution", "--input", "o/slp-js-N50", "--out", "sol.csv"], dir.path());
    assert_eq!(p.status.code(), Some(0));
    let sol = std::fs::read_to_string(dir.path().join("sol.csv")).unwrap();
    assert_eq!(sol.lines().count(), 51);
}

#[test]
fn sweep_writes_error_table() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("s.cfg"),
        "problem=accuracy-sine schemes=js,mop N=10,20,40 reference=js out=s\n",
    )
    .unwrap();
    let o = weno(&["sweep", "s.cfg"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let errors = std::fs::read_to_string(dir.path().join("s/errors.csv")).unwrap();
    assert_eq!(errors.lines().count(), 7);
    assert!(dir.path().join("s/increased.csv").exists());
}
