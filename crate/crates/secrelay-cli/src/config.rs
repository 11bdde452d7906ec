//! Flat key-value configuration files and the flag/file/default precedence.
//!
//! Format: one `key = value` pair per line, `#` starts a comment, blank
//! lines are ignored. Keys mirror the long flag names. Unknown keys are
//! rejected so typos fail loudly.
//!
//! Precedence for every knob: command-line flag, then config file, then the
//! `SECRELAY_SEED` environment variable (seed only), then built-in defaults.

use crate::{CliError, CliResult};
use std::collections::BTreeMap;
use std::path::Path;

pub const SEED_ENV_VAR: &str = "SECRELAY_SEED";
pub const DEFAULT_SEED: u64 = 42;

const KNOWN_KEYS: &[&str] = &[
    "alpha",
    "alphas",
    "trials",
    "seed",
    "chunk-size",
    "output",
    "format",
    "resolution",
    "sectors",
    "eves",
    "ratio-cap",
    "threads",
];

/// Parsed configuration file contents.
#[derive(Debug, Clone, Default)]
pub struct FileConfig {
    entries: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!(
                    "line {}: expected `key = value`, got `{}`",
                    lineno + 1,
                    line
                ));
            };
            let key = key.trim();
            let value = value.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(format!("line {}: unknown key `{}`", lineno + 1, key));
            }
            if value.is_empty() {
                return Err(format!("line {}: empty value for `{}`", lineno + 1, key));
            }
            if entries.insert(key.to_string(), value.to_string()).is_some() {
                return Err(format!("line {}: duplicate key `{}`", lineno + 1, key));
            }
        }
        Ok(Self { entries })
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
            .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }

    pub fn get_str(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|s| s.as_str())
    }

    fn parsed<T: std::str::FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        match self.entries.get(key) {
            None => Ok(None),
            Some(v) => v.parse::<T>().map(Some).map_err(|_| {
                CliError::Usage(format!("config key `{key}`: cannot parse `{v}`"))
            }),
        }
    }

    pub fn get_f64(&self, key: &str) -> CliResult<Option<f64>> {
        self.parsed(key)
    }

    pub fn get_u64(&self, key: &str) -> CliResult<Option<u64>> {
        self.parsed(key)
    }

    pub fn get_u32(&self, key: &str) -> CliResult<Option<u32>> {
        self.parsed(key)
    }

    pub fn get_usize(&self, key: &str) -> CliResult<Option<usize>> {
        self.parsed(key)
    }

    /// Comma-separated list of floats.
    pub fn get_f64_list(&self, key: &str) -> CliResult<Option<Vec<f64>>> {
        match self.entries.get(key) {
            None => Ok(None),
            Some(v) => v
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("config key `{key}`: cannot parse `{v}`"))),
        }
    }
}

/// First of flag, config value, default.
pub fn resolve<T>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

/// Seed precedence adds the environment override of the built-in default.
pub fn resolve_seed(flag: Option<u64>, file: Option<u64>, env_value: Option<String>) -> CliResult<u64> {
    let env_seed = match env_value {
        None => None,
        Some(s) => Some(s.parse::<u64>().map_err(|_| {
            CliError::Usage(format!("{SEED_ENV_VAR}: cannot parse `{s}` as a seed"))
        })?),
    };
    Ok(flag
        .or(file)
        .or(env_seed)
        .unwrap_or(DEFAULT_SEED))
}

/// Reads `SECRELAY_SEED` from the process environment.
pub fn seed_env() -> Option<String> {
    std::env::var(SEED_ENV_VAR).ok()
}
