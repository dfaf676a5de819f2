//! Flat `key = value` configuration named by the `SC_CONFIG` variable.
//!
//! Keys are the long flag names (`family`, `kappa-const`, `range`, ...).
//! Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::path::Path;

use crate::{usage, CliError};

pub const ENV_VAR: &str = "SC_CONFIG";

pub const KEYS: [&str; 16] = [
    "family",
    "omega",
    "mu",
    "m",
    "kappa-const",
    "tau-const",
    "theta",
    "phi-rate",
    "phi0",
    "depth",
    "profile",
    "range",
    "step",
    "out",
    "output",
    "deg",
];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("config line {}: expected key = value", i + 1)))?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(usage(format!("config line {}: unknown key '{key}'", i + 1)));
            }
            values.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Config { values })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    /// The file named by `SC_CONFIG`, or an empty configuration.
    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var_os(ENV_VAR) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Ok(Config::default()),
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn number(&self, key: &str) -> Result<Option<f64>, CliError> {
        self.get(key)
            .map(|v| v.parse::<f64>().map_err(|_| usage(format!("config key '{key}': '{v}' is not a number"))))
            .transpose()
    }

    pub fn flag(&self, key: &str) -> Result<bool, CliError> {
        match self.get(key) {
            None | Some("false") | Some("0") => Ok(false),
            Some("true") | Some("1") => Ok(true),
            Some(v) => Err(usage(format!("config key '{key}': '{v}' is not a boolean"))),
        }
    }
}
