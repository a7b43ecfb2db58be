//! Experiment configuration.
//!
//! A config is a TOML file of top-level `key = value` pairs:
//!
//! ```text
//! name = "diameter-path"          # optional, default "experiment"
//! base = "path"                   # a base graph kind
//! n = [256, 512, 1024]            # strictly ascending sizes
//! eps = 0.5                       # or: eps_exponent = 0.5  (eps = n^-a)
//! seeds = 10                      # runs per size, >= 1
//! root_seed = 1                   # optional, default 0
//! metrics = ["diameter", "t_mix"] # non-empty
//! alpha = 0.5                     # optional, for "profile"; default 0.5
//! k = "auto"                      # optional blob size; "auto" = ceil(4/eps)
//! ```

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph_core::{BaseKind, PerturbationParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Diameter,
    TMix,
    FrSum,
    IotaExact,
    CExact,
    Profile,
    ConnExpansion,
    Longpath,
    BlobCheck,
    Prop17Check,
}

impl Metric {
    pub const ALL: [Metric; 10] = [
        Metric::Diameter,
        Metric::TMix,
        Metric::FrSum,
        Metric::IotaExact,
        Metric::CExact,
        Metric::Profile,
        Metric::ConnExpansion,
        Metric::Longpath,
        Metric::BlobCheck,
        Metric::Prop17Check,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Diameter => "diameter",
            Metric::TMix => "t_mix",
            Metric::FrSum => "fr_sum",
            Metric::IotaExact => "iota_exact",
            Metric::CExact => "c_exact",
            Metric::Profile => "profile",
            Metric::ConnExpansion => "conn_expansion",
            Metric::Longpath => "longpath",
            Metric::BlobCheck => "blob_check",
            Metric::Prop17Check => "prop17_check",
        }
    }

    /// Stable index used in seed derivation.
    pub fn id(self) -> u64 {
        Metric::ALL.iter().position(|&m| m == self).unwrap() as u64
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Metric::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| {
            let known: Vec<_> = Metric::ALL.iter().map(|m| m.name()).collect();
            Error::Config(format!("unknown metric '{s}' (known: {})", known.join(", ")))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EpsSpec {
    Fixed(f64),
    Exponent(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlobSize {
    Auto,
    Fixed(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub name: String,
    pub base: BaseKind,
    pub n_list: Vec<usize>,
    pub eps: EpsSpec,
    pub seeds: usize,
    pub root_seed: u64,
    pub metrics: Vec<Metric>,
    pub alpha: f64,
    pub k: BlobSize,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawK {
    Int(usize),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    name: Option<String>,
    base: String,
    n: Vec<usize>,
    eps: Option<f64>,
    eps_exponent: Option<f64>,
    seeds: usize,
    root_seed: Option<u64>,
    metrics: Vec<String>,
    alpha: Option<f64>,
    k: Option<RawK>,
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))?;
        let base = raw.base.parse::<BaseKind>().map_err(|e| Error::Config(e.to_string()))?;
        let eps = match (raw.eps, raw.eps_exponent) {
            (Some(e), None) => EpsSpec::Fixed(e),
            (None, Some(a)) => EpsSpec::Exponent(a),
            _ => return Err(Error::Config("give exactly one of eps, eps_exponent".into())),
        };
        let metrics = raw.metrics.iter().map(|m| m.parse()).collect::<Result<Vec<Metric>>>()?;
        let k = match raw.k {
            None => BlobSize::Auto,
            Some(RawK::Int(k)) => BlobSize::Fixed(k),
            Some(RawK::Text(t)) if t == "auto" => BlobSize::Auto,
            Some(RawK::Text(t)) => return Err(Error::Config(format!("k must be a positive integer or \"auto\", got '{t}'"))),
        };
        let cfg = ExperimentConfig {
            name: raw.name.unwrap_or_else(|| "experiment".into()),
            base,
            n_list: raw.n,
            eps,
            seeds: raw.seeds,
            root_seed: raw.root_seed.unwrap_or(0),
            metrics,
            alpha: raw.alpha.unwrap_or(0.5),
            k,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path).map_err(Error::file(path))?)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Config(m));
        if self.n_list.is_empty() || self.n_list.windows(2).any(|w| w[0] >= w[1]) {
            return fail("n must be a non-empty, strictly ascending list".into());
        }
        if self.seeds == 0 {
            return fail("seeds must be at least 1".into());
        }
        if self.metrics.is_empty() {
            return fail("metrics must not be empty".into());
        }
        if self.k == BlobSize::Fixed(0) {
            return fail("k must be positive".into());
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return fail(format!("alpha must lie in (0, 1), got {}", self.alpha));
        }
        for &n in &self.n_list {
            self.params(0).validate(n).map_err(|e| Error::Config(e.to_string()))?;
        }
        Ok(())
    }

    pub fn params(&self, seed: u64) -> PerturbationParams {
        match self.eps {
            EpsSpec::Fixed(e) => PerturbationParams::new(e, seed),
            EpsSpec::Exponent(a) => PerturbationParams::with_exponent(a, seed),
        }
    }

    pub fn eps_for(&self, n: usize) -> f64 {
        self.params(0).eps_for(n)
    }
}
