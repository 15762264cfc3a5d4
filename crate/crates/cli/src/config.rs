//! Run configuration: a flat `key = value` file overlaid with command-line
//! flags, validated into typed settings before any command runs.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use adders::AdderKind;
use multinet::{CommMethod, DistAdder, TimingParams, TopologyKind};
use qecrel::{Code, CodeStack};

use crate::output::Format;
use crate::CliError;

/// Every key a config file may set.
pub const KEYS: [&str; 17] = [
    "format",
    "out",
    "n_max",
    "n",
    "epr_ns",
    "adder",
    "topology",
    "method",
    "classical_ns",
    "ccnot_ns",
    "cnot_ns",
    "not_ns",
    "t",
    "target",
    "code",
    "kind",
    "circuit",
];

pub type RawConfig = BTreeMap<String, String>;

/// Parses `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_config(text: &str) -> Result<RawConfig, CliError> {
    let mut map = RawConfig::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected `key = value`", i + 1)))?;
        let k = k.trim();
        if !KEYS.contains(&k) {
            return Err(CliError::Usage(format!(
                "config line {}: unknown key `{k}` (valid keys: {})",
                i + 1,
                KEYS.join(", ")
            )));
        }
        if map.insert(k.to_string(), v.trim().to_string()).is_some() {
            return Err(CliError::Usage(format!("config line {}: `{k}` is set twice", i + 1)));
        }
    }
    Ok(map)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub n_max: usize,
    pub n: Option<Vec<usize>>,
    pub epr_ns: Option<Vec<f64>>,
    pub adders: Option<Vec<DistAdder>>,
    pub topologies: Option<Vec<TopologyKind>>,
    pub method: CommMethod,
    pub timing: TimingParams,
    pub t: Option<Vec<f64>>,
    pub target: Option<f64>,
    pub codes: Option<Vec<CodeStack>>,
    pub kind: Option<AdderKind>,
    pub circuit: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            format: Format::Text,
            out: None,
            n_max: 4,
            n: None,
            epr_ns: None,
            adders: None,
            topologies: None,
            method: CommMethod::Teledata,
            timing: TimingParams::default(),
            t: None,
            target: None,
            codes: None,
            kind: None,
            circuit: None,
        }
    }
}

fn bad(key: &str, value: &str, why: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("invalid value `{value}` for `{key}`: {why}"))
}

fn one<T: FromStr>(key: &str, value: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    value.trim().parse().map_err(|e| bad(key, value, e))
}

fn list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    let v: Vec<T> = value.split(',').map(|s| one(key, s)).collect::<Result<_, _>>()?;
    if v.is_empty() {
        return Err(bad(key, value, "empty list"));
    }
    Ok(v)
}

fn positive(key: &str, value: &str) -> Result<f64, CliError> {
    let x: f64 = one(key, value)?;
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(bad(key, value, "must be positive"))
    }
}

/// `none`, `7`, `23`, or two of those joined by `+` (inner first).
pub fn parse_stack(s: &str) -> Result<CodeStack, String> {
    let code = |c: &str| match c.trim() {
        "7" | "[[7,1,3]]" | "steane" => Ok(Code::STEANE),
        "23" | "[[23,1,7]]" | "golay" => Ok(Code::GOLAY),
        other => Err(format!("unknown code `{other}` (expected 7 or 23)")),
    };
    match s.trim() {
        "none" | "1" => Ok(CodeStack::none()),
        t => match t.split_once('+') {
            Some((i, o)) => Ok(CodeStack::concat(code(i)?, code(o)?)),
            None => Ok(CodeStack::single(code(t)?)),
        },
    }
}

impl RunConfig {
    pub fn from_raw(raw: &RawConfig) -> Result<Self, CliError> {
        let mut c = RunConfig::default();
        for (k, v) in raw {
            let v = v.as_str();
            match k.as_str() {
                "format" => {
                    c.format = match v {
                        "csv" => Format::Csv,
                        "text" => Format::Text,
                        _ => return Err(bad(k, v, "expected csv or text")),
                    }
                }
                "out" => c.out = Some(PathBuf::from(v)),
                "n_max" => c.n_max = one(k, v)?,
                "n" => {
                    let n: Vec<usize> = list(k, v)?;
                    if n.contains(&0) {
                        return Err(bad(k, v, "widths must be positive"));
                    }
                    c.n = Some(n);
                }
                "epr_ns" => {
                    c.epr_ns = Some(v.split(',').map(|s| positive(k, s)).collect::<Result<_, _>>()?);
                }
                "adder" => c.adders = Some(list(k, v)?),
                "topology" => c.topologies = Some(list(k, v)?),
                "method" => c.method = one(k, v)?,
                "classical_ns" => c.timing.classical_ns = positive(k, v)?,
                "ccnot_ns" => c.timing.ccnot_ns = positive(k, v)?,
                "cnot_ns" => c.timing.cnot_ns = positive(k, v)?,
                "not_ns" => c.timing.not_ns = positive(k, v)?,
                "t" => c.t = Some(v.split(',').map(|s| positive(k, s)).collect::<Result<_, _>>()?),
                "target" => {
                    let x = positive(k, v)?;
                    if x > 1.0 {
                        return Err(bad(k, v, "a failure probability is at most 1"));
                    }
                    c.target = Some(x);
                }
                "code" => {
                    c.codes = Some(v.split(',').map(|s| parse_stack(s).map_err(|e| bad(k, v, e))).collect::<Result<_, _>>()?)
                }
                "kind" => c.kind = Some(one(k, v)?),
                "circuit" => c.circuit = Some(PathBuf::from(v)),
                other => return Err(CliError::Usage(format!("unknown key `{other}`"))),
            }
        }
        Ok(c)
    }
}
