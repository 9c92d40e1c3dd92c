//! Run configuration: command-line flags over a TOML file over defaults.

use std::path::{Path, PathBuf};

use hulthen_core::{Method, PotentialSpec, QuantumNumbers, IMPROVED_C0};
use serde::Deserialize;

use crate::args::{CommonArgs, Format};
use crate::error::{CliError, CliResult};

pub const ATOMIC_UNITS_ENV: &str = "HULTHEN_ATOMIC_UNITS";

/// Same keys as the long flags, with `-` replaced by `_`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub state: Option<Vec<String>>,
    pub delta: Option<Vec<f64>>,
    pub z: Option<f64>,
    pub mu: Option<f64>,
    pub hbar: Option<f64>,
    pub c0: Option<Vec<C0Value>>,
    pub method: Option<Vec<String>>,
    pub format: Option<Format>,
    pub grid_points: Option<usize>,
    pub rmax_factor: Option<f64>,
    pub out: Option<PathBuf>,
    pub quick: Option<bool>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum C0Value {
    Number(f64),
    Text(String),
}

impl ConfigFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

/// Fully resolved settings. List fields are `None` when neither the flags
/// nor the file gave them, so each subcommand can pick its own default.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub z: f64,
    pub mu: f64,
    pub hbar: f64,
    pub states: Option<Vec<QuantumNumbers>>,
    pub deltas: Option<Vec<f64>>,
    pub c0s: Option<Vec<f64>>,
    pub methods: Option<Vec<Method>>,
    pub format: Option<Format>,
    pub grid_points: Option<usize>,
    pub rmax_factor: Option<f64>,
    pub out: Option<PathBuf>,
    pub quick: bool,
}

/// Accepts `0`, `1/12`, any fraction `p/q` or a decimal number.
pub fn parse_c0(text: &str) -> CliResult<f64> {
    let t = text.trim();
    let bad = || CliError::Usage(format!("invalid --c0 value `{text}`: expected 0, 1/12, a fraction or a number"));
    let value = match t.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0.0 {
                return Err(bad());
            }
            p / q
        }
        None => t.parse().map_err(|_| bad())?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

pub fn parse_methods(list: &[String]) -> CliResult<Vec<Method>> {
    let mut out = Vec::new();
    for item in list.iter().flat_map(|s| s.split(',')).map(str::trim).filter(|s| !s.is_empty()) {
        let m = Method::parse(item).ok_or_else(|| {
            CliError::Usage(format!("unknown method `{item}`; expected nu, susy, numeric-exact or numeric-approx"))
        })?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("--method needs at least one method".into()));
    }
    Ok(out)
}

pub fn parse_states(list: &[String]) -> CliResult<Vec<QuantumNumbers>> {
    list.iter().map(|s| s.parse::<QuantumNumbers>().map_err(CliError::from)).collect()
}

fn atomic_units_enabled(env: Option<&str>) -> bool {
    env.map(|v| v.trim() != "0").unwrap_or(true)
}

impl RunConfig {
    /// Resolves flags, the optional config file and the environment.
    pub fn resolve(args: &CommonArgs, env_atomic_units: Option<&str>) -> CliResult<Self> {
        let file = match &args.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let atomic = atomic_units_enabled(env_atomic_units);
        let unit = |flag: Option<f64>, file: Option<f64>, name: &str| -> CliResult<f64> {
            match flag.or(file) {
                Some(v) => Ok(v),
                None if atomic => Ok(1.0),
                None => Err(CliError::Usage(format!("{ATOMIC_UNITS_ENV}=0 requires --{name}"))),
            }
        };
        let mu = unit(args.mu, file.mu, "mu")?;
        let hbar = unit(args.hbar, file.hbar, "hbar")?;
        let z = args.z.or(file.z).unwrap_or(1.0);

        let states = match args.states.as_ref().or(file.state.as_ref()) {
            Some(list) => Some(parse_states(list)?),
            None => None,
        };
        let c0s = match (&args.c0s, &file.c0) {
            (Some(list), _) => Some(list.iter().map(|s| parse_c0(s)).collect::<CliResult<Vec<_>>>()?),
            (None, Some(list)) => Some(
                list.iter()
                    .map(|v| match v {
                        C0Value::Number(x) => Ok(*x),
                        C0Value::Text(s) => parse_c0(s),
                    })
                    .collect::<CliResult<Vec<_>>>()?,
            ),
            (None, None) => None,
        };
        let methods = match args.methods.as_ref().or(file.method.as_ref()) {
            Some(list) => Some(parse_methods(list)?),
            None => None,
        };
        let cfg = Self {
            z,
            mu,
            hbar,
            states,
            deltas: args.deltas.clone().or(file.delta),
            c0s,
            methods,
            format: args.format.or(file.format),
            grid_points: args.grid_points.or(file.grid_points),
            rmax_factor: args.rmax_factor.or(file.rmax_factor),
            out: args.out.clone().or(file.out),
            quick: args.quick || file.quick.unwrap_or(false),
        };
        // surface bad physical parameters as usage errors up front
        for &delta in cfg.deltas.iter().flatten() {
            for &c0 in cfg.c0s.as_deref().unwrap_or(&[IMPROVED_C0]) {
                cfg.spec(delta, c0)?;
            }
        }
        if let Some(f) = cfg.rmax_factor {
            if !(f.is_finite() && f > 0.0) {
                return Err(CliError::Usage(format!("--rmax-factor must be positive, got {f}")));
            }
        }
        Ok(cfg)
    }

    pub fn spec(&self, delta: f64, c0: f64) -> CliResult<PotentialSpec<f64>> {
        Ok(PotentialSpec::new(self.z, delta, self.mu, self.hbar, c0)?)
    }

    pub fn deltas_or(&self, default: &[f64]) -> Vec<f64> {
        self.deltas.clone().unwrap_or_else(|| default.to_vec())
    }

    pub fn c0s_or(&self, default: &[f64]) -> Vec<f64> {
        self.c0s.clone().unwrap_or_else(|| default.to_vec())
    }

    pub fn methods_or(&self, default: &[Method]) -> Vec<Method> {
        self.methods.clone().unwrap_or_else(|| default.to_vec())
    }

    pub fn require_states(&self) -> CliResult<Vec<QuantumNumbers>> {
        self.states.clone().ok_or_else(|| CliError::Usage("--state is required".into()))
    }

    pub fn require_deltas(&self) -> CliResult<Vec<f64>> {
        self.deltas.clone().ok_or_else(|| CliError::Usage("--delta is required".into()))
    }
}
