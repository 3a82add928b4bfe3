//! Run descriptions in a flat `key=value` text format.
//!
//! Tokens are separated by whitespace or newlines, `#` starts a comment that
//! runs to the end of the line, and every key may appear at most once:
//!
//! ```text
//! problem=slp preset=desk
//! schemes=mip-acmk,mop-acmk   # one or more schemes
//! cfs0=0.01 cfs1=0.94 k0=0 k1=0
//! N=200,400,800 cfl=0.1 t_end=2
//! ```
//!
//! [`RunConfig::to_text`] writes a canonical form that parses back to an
//! equal value.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::diagnostics::Schedule;
use crate::error::{Error, Result};
use crate::mapping::MappingSpec;
use crate::problems::{registry_lookup, Preset, ProblemSpec};
use crate::solver::{CharAverage, DtMode, TimeStepping};

pub const SCHEME_NAMES: [&str; 6] = ["js", "m", "pm", "im", "mip-acmk", "mop-acmk"];

pub const KNOWN_KEYS: [&str; 29] = [
    "problem",
    "preset",
    "scheme",
    "schemes",
    "k",
    "pm_k",
    "im_k",
    "A",
    "cfs_ratio",
    "ks",
    "cfs0",
    "cfs1",
    "k0",
    "k1",
    "N",
    "cfl",
    "cfl_mode",
    "t_end",
    "eps",
    "nonop",
    "nonop_records",
    "trace",
    "overshoot",
    "out",
    "reference",
    "progress",
    "char_average",
    "gamma",
    "label",
];

/// Canonical scheme name, accepting a few aliases.
pub fn canonical_scheme_name(s: &str) -> Result<&'static str> {
    let name = match s.to_ascii_lowercase().as_str() {
        "js" | "weno-js" => "js",
        "m" | "weno-m" => "m",
        "pm" | "pm6" | "weno-pm6" => "pm",
        "im" | "weno-im" => "im",
        "mip" | "mip-acmk" => "mip-acmk",
        "mop" | "mop-acmk" => "mop-acmk",
        _ => {
            return Err(Error::config(
                "scheme",
                format!("unknown scheme '{s}'; known: {}", SCHEME_NAMES.join(", ")),
            ))
        }
    };
    Ok(name)
}

/// Parameters of the parametrized mappings, kept as written so that the
/// text form round-trips exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeParams {
    pub pm_k: u32,
    pub im_k: u32,
    pub im_a: f64,
    pub mip_cfs_ratio: f64,
    pub mip_ks: f64,
    pub mop_cfs0: f64,
    pub mop_cfs1: f64,
    pub mop_k0: f64,
    pub mop_k1: f64,
}

impl Default for SchemeParams {
    fn default() -> Self {
        SchemeParams {
            pm_k: 6,
            im_k: 2,
            im_a: 0.1,
            mip_cfs_ratio: 0.1,
            mip_ks: 0.0,
            mop_cfs0: 0.01,
            mop_cfs1: 0.94,
            mop_k0: 0.0,
            mop_k1: 0.0,
        }
    }
}

impl SchemeParams {
    pub fn build(&self, name: &str) -> Result<MappingSpec> {
        match canonical_scheme_name(name)? {
            "js" => Ok(MappingSpec::Js),
            "m" => Ok(MappingSpec::M),
            "pm" => MappingSpec::pm(self.pm_k),
            "im" => MappingSpec::im(self.im_k, self.im_a),
            "mip-acmk" => MappingSpec::mip(self.mip_cfs_ratio, self.mip_ks),
            _ => MappingSpec::mop(self.mop_cfs0, self.mop_cfs1, self.mop_k0, self.mop_k1),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub problem: String,
    pub preset: Preset,
    /// Canonical scheme names in the order given.
    pub schemes: Vec<String>,
    pub params: SchemeParams,
    /// Overrides the preset's resolutions.
    pub resolutions: Option<Vec<usize>>,
    pub cfl: Option<f64>,
    pub cfl_mode: Option<DtMode>,
    pub t_end: Option<f64>,
    pub eps: f64,
    /// Count non-OP instances at every stage.
    pub nonop: bool,
    /// When non-OP records are kept.
    pub nonop_records: Schedule,
    pub trace: Schedule,
    pub overshoot: bool,
    pub out: PathBuf,
    /// Scheme against which increased errors are reported.
    pub reference: Option<String>,
    pub progress: Option<usize>,
    pub char_average: CharAverage,
    pub gamma: f64,
    pub label: Option<String>,
}

impl RunConfig {
    /// Defaults for `problem` with every optional setting left alone.
    pub fn new(problem: &str, schemes: &[&str]) -> Result<Self> {
        registry_lookup(problem, Preset::Desk)?;
        let schemes = schemes
            .iter()
            .map(|s| canonical_scheme_name(s).map(str::to_string))
            .collect::<Result<Vec<_>>>()?;
        if schemes.is_empty() {
            return Err(Error::config("scheme", "no scheme given"));
        }
        Ok(RunConfig {
            problem: problem.to_string(),
            preset: Preset::Desk,
            schemes,
            params: SchemeParams::default(),
            resolutions: None,
            cfl: None,
            cfl_mode: None,
            t_end: None,
            eps: crate::kernel::DEFAULT_EPSILON,
            nonop: true,
            nonop_records: Schedule::FinalStepFirstStage,
            trace: Schedule::Never,
            overshoot: true,
            out: PathBuf::from("out"),
            reference: None,
            progress: None,
            char_average: CharAverage::Mean,
            gamma: 1.4,
            label: None,
        })
    }

    /// Mapping specifications, one per scheme.
    pub fn mapping_specs(&self) -> Result<Vec<MappingSpec>> {
        self.schemes.iter().map(|s| self.params.build(s)).collect()
    }

    /// The registered problem with this configuration's overrides applied.
    pub fn problem_spec(&self) -> Result<ProblemSpec> {
        let mut spec = registry_lookup(&self.problem, self.preset)?;
        if let Some(n) = &self.resolutions {
            spec.resolutions = n.clone();
        }
        if let Some(t) = self.t_end {
            spec.t_end = t;
        }
        match (self.cfl_mode, self.cfl) {
            (Some(DtMode::AccuracyCfl), _) => spec.stepping = TimeStepping::accuracy(),
            (Some(DtMode::FixedCfl), c) => {
                spec.stepping = TimeStepping::fixed(c.unwrap_or(spec.stepping.cfl));
            }
            (None, Some(c)) => spec.stepping = TimeStepping::fixed(c),
            (None, None) => {}
        }
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let spec = self.problem_spec()?;
        if self.schemes.is_empty() {
            return Err(Error::config("scheme", "no scheme given"));
        }
        self.mapping_specs()?;
        if spec.resolutions.is_empty() {
            return Err(Error::config("N", "empty resolution list"));
        }
        for w in spec.resolutions.windows(2) {
            if w[1] != 2 * w[0] {
                return Err(Error::config(
                    "N",
                    format!("resolutions must double ({} then {})", w[0], w[1]),
                ));
            }
        }
        if !(spec.t_end >= 0.0 && spec.t_end.is_finite()) {
            return Err(Error::config("t_end", format!("t_end = {} must be finite and >= 0", spec.t_end)));
        }
        if let Some(c) = self.cfl {
            if !(c > 0.0 && c.is_finite()) {
                return Err(Error::config("cfl", format!("cfl = {c} must be positive")));
            }
        }
        if !(self.eps > 0.0 && self.eps.is_finite()) {
            return Err(Error::config("eps", format!("eps = {} must be positive", self.eps)));
        }
        if !(self.gamma > 1.0 && self.gamma.is_finite()) {
            return Err(Error::config("gamma", format!("gamma = {} must exceed 1", self.gamma)));
        }
        if let Some(r) = &self.reference {
            if !self.schemes.contains(r) {
                return Err(Error::config("reference", format!("reference '{r}' is not among the schemes")));
            }
        }
        if self.progress == Some(0) {
            return Err(Error::config("progress", "progress cadence must be positive"));
        }
        Ok(())
    }

    /// Canonical text, one key per line, in a fixed order.
    pub fn to_text(&self) -> String {
        let mut lines = vec![
            format!("problem={}", self.problem),
            format!("preset={}", self.preset.name()),
            format!("schemes={}", self.schemes.join(",")),
        ];
        let has = |n: &str| self.schemes.iter().any(|s| s == n);
        let p = &self.params;
        if has("pm") {
            lines.push(format!("pm_k={}", p.pm_k));
        }
        if has("im") {
            lines.push(format!("im_k={}", p.im_k));
            lines.push(format!("A={}", p.im_a));
        }
        if has("mip-acmk") {
            lines.push(format!("cfs_ratio={}", p.mip_cfs_ratio));
            lines.push(format!("ks={}", p.mip_ks));
        }
        if has("mop-acmk") {
            lines.push(format!("cfs0={}", p.mop_cfs0));
            lines.push(format!("cfs1={}", p.mop_cfs1));
            lines.push(format!("k0={}", p.mop_k0));
            lines.push(format!("k1={}", p.mop_k1));
        }
        if let Some(n) = &self.resolutions {
            let n: Vec<String> = n.iter().map(usize::to_string).collect();
            lines.push(format!("N={}", n.join(",")));
        }
        if let Some(c) = self.cfl {
            lines.push(format!("cfl={c}"));
        }
        if let Some(m) = self.cfl_mode {
            lines.push(format!("cfl_mode={}", dt_mode_name(m)));
        }
        if let Some(t) = self.t_end {
            lines.push(format!("t_end={t}"));
        }
        lines.push(format!("eps={}", self.eps));
        lines.push(format!("nonop={}", self.nonop));
        lines.push(format!("nonop_records={}", schedule_name(self.nonop_records)));
        lines.push(format!("trace={}", schedule_name(self.trace)));
        lines.push(format!("overshoot={}", self.overshoot));
        lines.push(format!("out={}", self.out.display()));
        if let Some(r) = &self.reference {
            lines.push(format!("reference={r}"));
        }
        if let Some(p) = self.progress {
            lines.push(format!("progress={p}"));
        }
        lines.push(format!("char_average={}", char_average_name(self.char_average)));
        lines.push(format!("gamma={}", self.gamma));
        if let Some(l) = &self.label {
            lines.push(format!("label={l}"));
        }
        let mut text = lines.join("\n");
        text.push('\n');
        text
    }
}

fn dt_mode_name(m: DtMode) -> &'static str {
    match m {
        DtMode::FixedCfl => "fixed",
        DtMode::AccuracyCfl => "accuracy",
    }
}

pub fn schedule_name(s: Schedule) -> &'static str {
    match s {
        Schedule::Never => "off",
        Schedule::EveryStage => "every",
        Schedule::FinalStepFirstStage => "final",
    }
}

pub fn parse_schedule(key: &str, v: &str) -> Result<Schedule> {
    match v {
        "off" | "never" | "false" => Ok(Schedule::Never),
        "every" | "all" => Ok(Schedule::EveryStage),
        "final" | "true" => Ok(Schedule::FinalStepFirstStage),
        _ => Err(Error::config(key, format!("'{v}' is not one of off, final, every"))),
    }
}

fn char_average_name(a: CharAverage) -> &'static str {
    match a {
        CharAverage::Mean => "mean",
        CharAverage::Roe => "roe",
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| Error::config(key, format!("cannot parse '{v}'")))
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v {
        "true" | "on" | "yes" | "1" => Ok(true),
        "false" | "off" | "no" | "0" => Ok(false),
        _ => Err(Error::config(key, format!("'{v}' is not a boolean"))),
    }
}

/// Splits the text into `key → value`, rejecting unknown and repeated keys.
fn tokenize(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::config(tok, "expected key=value"))?;
            if !KNOWN_KEYS.contains(&k) {
                return Err(Error::config(k, "unknown key"));
            }
            if v.is_empty() {
                return Err(Error::config(k, "empty value"));
            }
            if map.insert(k.to_string(), v.to_string()).is_some() {
                return Err(Error::config(k, "key given more than once"));
            }
        }
    }
    Ok(map)
}

pub fn parse_config(text: &str) -> Result<RunConfig> {
    let kv = tokenize(text)?;
    let get = |k: &str| kv.get(k).map(String::as_str);

    let problem = get("problem").ok_or_else(|| Error::config("problem", "missing"))?;
    let schemes: Vec<&str> = match (get("scheme"), get("schemes")) {
        (Some(_), Some(_)) => return Err(Error::config("schemes", "give either scheme or schemes")),
        (Some(s), None) => vec![s],
        (None, Some(s)) => s.split(',').filter(|s| !s.is_empty()).collect(),
        (None, None) => return Err(Error::config("scheme", "missing")),
    };
    let mut cfg = RunConfig::new(problem, &schemes)?;
    if let Some(p) = get("preset") {
        cfg.preset = Preset::parse(p)?;
    }

    let has = |n: &str| cfg.schemes.iter().any(|s| s == n);
    let p = &mut cfg.params;
    if let Some(k) = get("k") {
        let k: u32 = parse_num("k", k)?;
        match (has("pm"), has("im")) {
            (true, true) => return Err(Error::config("k", "ambiguous with both pm and im; use pm_k and im_k")),
            (true, false) => p.pm_k = k,
            (false, true) => p.im_k = k,
            (false, false) => return Err(Error::config("k", "only pm and im take k")),
        }
        if get("pm_k").is_some() || get("im_k").is_some() {
            return Err(Error::config("k", "give either k or pm_k/im_k"));
        }
    }
    if let Some(v) = get("pm_k") {
        p.pm_k = parse_num("pm_k", v)?;
    }
    if let Some(v) = get("im_k") {
        p.im_k = parse_num("im_k", v)?;
    }
    if let Some(v) = get("A") {
        p.im_a = parse_num("A", v)?;
    }
    if let Some(v) = get("cfs_ratio") {
        p.mip_cfs_ratio = parse_num("cfs_ratio", v)?;
    }
    if let Some(v) = get("ks") {
        p.mip_ks = parse_num("ks", v)?;
    }
    if let Some(v) = get("cfs0") {
        p.mop_cfs0 = parse_num("cfs0", v)?;
    }
    if let Some(v) = get("cfs1") {
        p.mop_cfs1 = parse_num("cfs1", v)?;
    }
    if let Some(v) = get("k0") {
        p.mop_k0 = parse_num("k0", v)?;
    }
    if let Some(v) = get("k1") {
        p.mop_k1 = parse_num("k1", v)?;
    }

    if let Some(v) = get("N") {
        let n = v
            .split(',')
            .map(|s| parse_num::<usize>("N", s))
            .collect::<Result<Vec<_>>>()?;
        cfg.resolutions = Some(n);
    }
    if let Some(v) = get("cfl") {
        cfg.cfl = Some(parse_num("cfl", v)?);
    }
    if let Some(v) = get("cfl_mode") {
        cfg.cfl_mode = Some(match v {
            "fixed" => DtMode::FixedCfl,
            "accuracy" => DtMode::AccuracyCfl,
            _ => return Err(Error::config("cfl_mode", format!("'{v}' is not fixed or accuracy"))),
        });
    }
    if let Some(v) = get("t_end") {
        cfg.t_end = Some(parse_num("t_end", v)?);
    }
    if let Some(v) = get("eps") {
        cfg.eps = parse_num("eps", v)?;
    }
    if let Some(v) = get("nonop") {
        cfg.nonop = parse_bool("nonop", v)?;
    }
    if let Some(v) = get("nonop_records") {
        cfg.nonop_records = parse_schedule("nonop_records", v)?;
    }
    if let Some(v) = get("trace") {
        cfg.trace = parse_schedule("trace", v)?;
    }
    if let Some(v) = get("overshoot") {
        cfg.overshoot = parse_bool("overshoot", v)?;
    }
    if let Some(v) = get("out") {
        cfg.out = PathBuf::from(v);
    }
    if let Some(v) = get("reference") {
        cfg.reference = Some(canonical_scheme_name(v)?.to_string());
    }
    if let Some(v) = get("progress") {
        cfg.progress = Some(parse_num("progress", v)?);
    }
    if let Some(v) = get("char_average") {
        cfg.char_average = match v {
            "mean" => CharAverage::Mean,
            "roe" => CharAverage::Roe,
            _ => return Err(Error::config("char_average", format!("'{v}' is not mean or roe"))),
        };
    }
    if let Some(v) = get("gamma") {
        cfg.gamma = parse_num("gamma", v)?;
    }
    if let Some(v) = get("label") {
        cfg.label = Some(v.to_string());
    }
    cfg.validate()?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key_of(e: Error) -> String {
        match e {
            Error::Config { key, .. } => key,
            other => panic!("expected a configuration error, got {other}"),
        }
    }

    #[test]
    fn mop_long_run_is_valid() {
        let c = parse_config(
            "scheme=mop-acmk cfs0=0.01 cfs1=0.94 k0=0 k1=0 problem=slp N=800 cfl=0.1 t_end=2000",
        )
        .unwrap();
        assert_eq!(c.mapping_specs().unwrap(), vec![MappingSpec::mop_default()]);
        let p = c.problem_spec().unwrap();
        assert_eq!(p.resolutions, vec![800]);
        assert_eq!(p.t_end, 2000.0);
        assert_eq!(p.stepping, TimeStepping::fixed(0.1));
    }

    #[test]
    fn im_parameters() {
        let c = parse_config("problem=slp scheme=im k=2 A=0.1").unwrap();
        assert_eq!(c.mapping_specs().unwrap(), vec![MappingSpec::im_default()]);
    }

    #[test]
    fn out_of_range_parameter_names_its_key() {
        assert_eq!(key_of(parse_config("problem=slp scheme=mop-acmk cfs0=0.5").unwrap_err()), "cfs0");
        assert_eq!(key_of(parse_config("problem=slp scheme=pm k=3").unwrap_err()), "k");
    }

    #[test]
    fn rejects_unknown_things() {
        assert_eq!(key_of(parse_config("problem=slp scheme=js colour=red").unwrap_err()), "colour");
        assert_eq!(key_of(parse_config("problem=nope scheme=js").unwrap_err()), "problem");
        assert_eq!(key_of(parse_config("problem=slp scheme=weno-z").unwrap_err()), "scheme");
        assert_eq!(key_of(parse_config("problem=slp scheme=js N=100,300").unwrap_err()), "N");
        assert_eq!(key_of(parse_config("problem=slp scheme=js scheme=m").unwrap_err()), "scheme");
        assert_eq!(key_of(parse_config("problem=slp schemes=js reference=m").unwrap_err()), "reference");
    }

    #[test]
    fn comments_and_lines() {
        let c = parse_config("# header\nproblem=accuracy-sine   # smooth\nschemes=js,mop\nN=10,20\n").unwrap();
        assert_eq!(c.schemes, vec!["js", "mop-acmk"]);
        assert_eq!(c.resolutions, Some(vec![10, 20]));
    }

    #[test]
    fn canonical_round_trip() {
        let texts = [
            "problem=slp scheme=mop-acmk cfs0=0.01 cfs1=0.94 k0=0 k1=0 N=800 cfl=0.1 t_end=2000",
            "problem=accuracy-sine schemes=js,m,pm,im,mip,mop reference=mip eps=1e-40 trace=every",
            "problem=riemann2d-c4 scheme=mip preset=paper char_average=roe progress=100 cfs_ratio=0.2 ks=0.5",
        ];
        for t in texts {
            let c = parse_config(t).unwrap();
            let canon = c.to_text();
            let c2 = parse_config(&canon).unwrap();
            assert_eq!(c, c2);
            assert_eq!(c2.to_text(), canon);
        }
    }
}
