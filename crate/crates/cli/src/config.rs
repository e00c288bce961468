use std::path::Path;

use anyhow::{Context, Result};
use serde::Deserialize;

use crate::BranchArg;

/// Defaults read from an optional TOML file; command-line flags win.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub branch: Option<BranchArg>,
    pub bound: Option<i64>,
    pub k_max: Option<u32>,
    pub t_min: Option<i64>,
    pub t_max: Option<i64>,
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Config> {
        let Some(path) = path else {
            return Ok(Config::default());
        };
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }
}
