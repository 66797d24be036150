use std::path::Path;
use std::sync::Arc;

use epslab_core::asymptotics::default_tolerance;
use epslab_core::rational::parse_rational;
use epslab_core::{MonomialIdeal, QuotientRing, RingHandle, RingIdeal};
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::Value;

use crate::error::{CliError, CliResult};
use crate::expr::{is_identifier, parse_list};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub vars: Vec<String>,
    #[serde(default)]
    pub quotient: Vec<String>,
    pub ideal: Vec<String>,
    pub nmax: Option<u32>,
    pub mmax: Option<u32>,
    pub kmax: Option<u32>,
    pub bmax: Option<u32>,
    pub seed: Option<u64>,
    /// `"p/q"`, a decimal string, or a JSON number.
    pub tolerance: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    pub nmax: u32,
    pub mmax: u32,
    pub kmax: u32,
    pub bmax: u32,
    pub seed: u64,
    pub tolerance: BigRational,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            nmax: 8,
            mmax: 3,
            kmax: 6,
            bmax: 8,
            seed: 0,
            tolerance: default_tolerance(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub ring: Arc<QuotientRing>,
    pub ideal: RingIdeal,
    pub params: Params,
}

pub fn parse_tolerance(value: &Value) -> CliResult<BigRational> {
    let text = match value {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => return Err(CliError::Parse(format!("tolerance: expected a number or string, got {other}"))),
    };
    match parse_rational(&text) {
        Some(t) if t >= BigRational::from_integer(0.into()) => Ok(t),
        _ => Err(CliError::Parse(format!("tolerance: cannot read '{text}' as a nonnegative rational"))),
    }
}

impl InstanceFile {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn build(&self) -> CliResult<Instance> {
        let mut seen = std::collections::BTreeSet::new();
        for name in &self.vars {
            if !is_identifier(name) {
                return Err(CliError::Parse(format!("vars: '{name}' is not an identifier")));
            }
            if !seen.insert(name) {
                return Err(CliError::Parse(format!("vars: duplicate name '{name}'")));
            }
        }
        let arity = self.vars.len();
        let quotient = parse_list("quotient", &self.quotient, &self.vars)?;
        let ideal = parse_list("ideal", &self.ideal, &self.vars)?;
        let q = MonomialIdeal::minimalize(arity, quotient).map_err(|e| CliError::Parse(e.to_string()))?;
        let ring = Arc::new(QuotientRing::new(self.vars.clone(), q).map_err(|e| CliError::Parse(e.to_string()))?);
        let ideal = ring.ideal(ideal).map_err(|e| CliError::Parse(e.to_string()))?;

        let defaults = Params::default();
        let params = Params {
            nmax: self.nmax.unwrap_or(defaults.nmax),
            mmax: self.mmax.unwrap_or(defaults.mmax),
            kmax: self.kmax.unwrap_or(defaults.kmax),
            bmax: self.bmax.unwrap_or(defaults.bmax),
            seed: self.seed.unwrap_or(defaults.seed),
            tolerance: match &self.tolerance {
                Some(v) => parse_tolerance(v)?,
                None => defaults.tolerance,
            },
        };
        Ok(Instance { ring, ideal, params })
    }
}

pub fn parse_instance(path: &Path) -> CliResult<Instance> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    InstanceFile::from_json(&text)
        .and_then(|f| f.build())
        .map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
}
