//! CSV tables. Floats are written with 17 significant digits so that
//! reading a file back reproduces every value bit for bit.

use std::io::{Read, Write};
use std::path::Path;

use crate::diagnostics::nonop::NonOpRecord;
use crate::diagnostics::norms::{ErrorNorms, ErrorRow};
use crate::diagnostics::probe::ProbeRow;
use crate::diagnostics::trace::TraceRecord;
use crate::error::{Error, Result};
use crate::mesh::{CellField1D, CellField2D};
use crate::solver::advection::Bias;
use crate::solver::flux::GasConstants;

pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

fn parse_f64(s: &str, col: &str) -> Result<f64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Data(format!("column {col}: cannot parse {s:?} as a number")))
}

fn parse_opt(s: &str, col: &str) -> Result<Option<f64>> {
    if s.trim().is_empty() {
        Ok(None)
    } else {
        parse_f64(s, col).map(Some)
    }
}

fn parse_usize(s: &str, col: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Data(format!("column {col}: cannot parse {s:?} as an integer")))
}

/// A row type with a fixed header.
pub trait CsvRecord: Sized {
    const HEADER: &'static [&'static str];
    fn to_fields(&self) -> Vec<String>;
    fn from_fields(fields: &[&str]) -> Result<Self>;
}

pub fn write_records<T: CsvRecord, W: Write>(writer: W, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(T::HEADER)?;
    for r in rows {
        w.write_record(r.to_fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_records<T: CsvRecord, R: Read>(reader: R) -> Result<Vec<T>> {
    let mut r = csv::Reader::from_reader(reader);
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != T::HEADER {
        return Err(Error::Data(format!(
            "unexpected header {header:?}, expected {:?}",
            T::HEADER
        )));
    }
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let fields: Vec<&str> = rec.iter().collect();
        out.push(T::from_fields(&fields)?);
    }
    Ok(out)
}

pub fn write_csv<T: CsvRecord>(path: &Path, rows: &[T]) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    write_records(std::fs::File::create(path)?, rows)
}

pub fn read_csv<T: CsvRecord>(path: &Path) -> Result<Vec<T>> {
    read_records(std::fs::File::open(path)?)
}

impl CsvRecord for ErrorRow {
    const HEADER: &'static [&'static str] =
        &["scheme", "N", "L1", "L2", "Linf", "order1", "order2", "orderinf"];

    fn to_fields(&self) -> Vec<String> {
        vec![
            self.scheme.clone(),
            self.n.to_string(),
            fmt_f64(self.norms.l1),
            fmt_f64(self.norms.l2),
            fmt_f64(self.norms.linf),
            fmt_opt(self.orders[0]),
            fmt_opt(self.orders[1]),
            fmt_opt(self.orders[2]),
        ]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        Ok(ErrorRow {
            scheme: f[0].to_string(),
            n: parse_usize(f[1], "N")?,
            norms: ErrorNorms {
                l1: parse_f64(f[2], "L1")?,
                l2: parse_f64(f[3], "L2")?,
                linf: parse_f64(f[4], "Linf")?,
            },
            orders: [
                parse_opt(f[5], "order1")?,
                parse_opt(f[6], "order2")?,
                parse_opt(f[7], "orderinf")?,
            ],
        })
    }
}

impl CsvRecord for NonOpRecord {
    const HEADER: &'static [&'static str] = &[
        "t", "step", "stage", "x", "bias", "w0", "w1", "w2", "g0", "g1", "g2", "pair",
    ];

    fn to_fields(&self) -> Vec<String> {
        let mut v = vec![
            fmt_f64(self.t),
            self.step.to_string(),
            self.stage.to_string(),
            fmt_f64(self.x),
            self.bias.label().to_string(),
        ];
        v.extend(self.omega.iter().map(|&x| fmt_f64(x)));
        v.extend(self.mapped.iter().map(|&x| fmt_f64(x)));
        v.push(format!("{}-{}", self.pair.0, self.pair.1));
        v
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        let bias = match f[4] {
            "-" => Bias::Left,
            "+" => Bias::Right,
            other => return Err(Error::Data(format!("column bias: unknown value {other:?}"))),
        };
        let pair = f[11]
            .split_once('-')
            .ok_or_else(|| Error::Data(format!("column pair: malformed {:?}", f[11])))?;
        Ok(NonOpRecord {
            t: parse_f64(f[0], "t")?,
            step: parse_usize(f[1], "step")?,
            stage: parse_usize(f[2], "stage")?,
            x: parse_f64(f[3], "x")?,
            bias,
            omega: [
                parse_f64(f[5], "w0")?,
                parse_f64(f[6], "w1")?,
                parse_f64(f[7], "w2")?,
            ],
            mapped: [
                parse_f64(f[8], "g0")?,
                parse_f64(f[9], "g1")?,
                parse_f64(f[10], "g2")?,
            ],
            pair: (parse_usize(pair.0, "pair")?, parse_usize(pair.1, "pair")?),
        })
    }
}

impl CsvRecord for TraceRecord {
    const HEADER: &'static [&'static str] = &["t", "x", "s", "omega", "g"];

    fn to_fields(&self) -> Vec<String> {
        vec![
            fmt_f64(self.t),
            fmt_f64(self.x),
            self.s.to_string(),
            fmt_f64(self.omega),
            fmt_f64(self.g),
        ]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        Ok(TraceRecord {
            t: parse_f64(f[0], "t")?,
            x: parse_f64(f[1], "x")?,
            s: parse_usize(f[2], "s")?,
            omega: parse_f64(f[3], "omega")?,
            g: parse_f64(f[4], "g")?,
        })
    }
}

impl CsvRecord for ProbeRow {
    const HEADER: &'static [&'static str] = &["label", "w0", "w1", "w2", "u", "err", "pct"];

    fn to_fields(&self) -> Vec<String> {
        let mut v = vec![self.label.clone()];
        v.extend(self.weights.iter().map(|&x| fmt_f64(x)));
        v.extend([fmt_f64(self.u), fmt_f64(self.err), fmt_f64(self.pct)]);
        v
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        Ok(ProbeRow {
            label: f[0].to_string(),
            weights: [
                parse_f64(f[1], "w0")?,
                parse_f64(f[2], "w1")?,
                parse_f64(f[3], "w2")?,
            ],
            u: parse_f64(f[4], "u")?,
            err: parse_f64(f[5], "err")?,
            pct: parse_f64(f[6], "pct")?,
        })
    }
}

/// One sample of the three mapping functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub omega: f64,
    pub g: [f64; 3],
}

impl CsvRecord for CurvePoint {
    const HEADER: &'static [&'static str] = &["omega", "g0", "g1", "g2"];

    fn to_fields(&self) -> Vec<String> {
        let mut v = vec![fmt_f64(self.omega)];
        v.extend(self.g.iter().map(|&x| fmt_f64(x)));
        v
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        Ok(CurvePoint {
            omega: parse_f64(f[0], "omega")?,
            g: [
                parse_f64(f[1], "g0")?,
                parse_f64(f[2], "g1")?,
                parse_f64(f[3], "g2")?,
            ],
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample1D {
    pub x: f64,
    pub u: f64,
}

impl CsvRecord for Sample1D {
    const HEADER: &'static [&'static str] = &["x", "u"];

    fn to_fields(&self) -> Vec<String> {
        vec![fmt_f64(self.x), fmt_f64(self.u)]
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        Ok(Sample1D {
            x: parse_f64(f[0], "x")?,
            u: parse_f64(f[1], "u")?,
        })
    }
}

pub fn snapshot_1d(field: &CellField1D) -> Vec<Sample1D> {
    field
        .interior(0)
        .iter()
        .enumerate()
        .map(|(j, &u)| Sample1D {
            x: field.grid.center(j),
            u,
        })
        .collect()
}

/// Primitive variables at one cell center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample2D {
    pub x: f64,
    pub y: f64,
    pub rho: f64,
    pub u: f64,
    pub v: f64,
    pub p: f64,
}

impl CsvRecord for Sample2D {
    const HEADER: &'static [&'static str] = &["x", "y", "rho", "u", "v", "p"];

    fn to_fields(&self) -> Vec<String> {
        [self.x, self.y, self.rho, self.u, self.v, self.p]
            .iter()
            .map(|&x| fmt_f64(x))
            .collect()
    }

    fn from_fields(f: &[&str]) -> Result<Self> {
        Ok(Sample2D {
            x: parse_f64(f[0], "x")?,
            y: parse_f64(f[1], "y")?,
            rho: parse_f64(f[2], "rho")?,
            u: parse_f64(f[3], "u")?,
            v: parse_f64(f[4], "v")?,
            p: parse_f64(f[5], "p")?,
        })
    }
}

/// Row-major (x fastest) primitive snapshot of a 2D Euler field.
pub fn snapshot_2d(field: &CellField2D, gas: &GasConstants) -> Vec<Sample2D> {
    let (nx, ny) = (field.grid.nx(), field.grid.ny());
    let mut out = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            let q = [
                field.get(0, i, j),
                field.get(1, i, j),
                field.get(2, i, j),
                field.get(3, i, j),
            ];
            let [rho, u, v, p] = gas.primitive(&q);
            out.push(Sample2D {
                x: field.grid.x.center(i),
                y: field.grid.y.center(j),
                rho,
                u,
                v,
                p,
            });
        }
    }
    out
}
