//! Layered settings: command-line flags, then `TREECALC_*` environment
//! variables, then an optional TOML file, then built-in defaults.

use std::path::Path;

use clap::ValueEnum;
use serde::Deserialize;

pub const DEFAULT_MAX_DEGREE: usize = 7;
pub const DEFAULT_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub max_degree: usize,
    pub truncation_order: usize,
    pub output_format: Format,
    pub unsafe_large: bool,
}

/// Keys accepted in the config file; all optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub max_degree: Option<usize>,
    #[serde(alias = "truncation_order")]
    pub order: Option<usize>,
    pub format: Option<Format>,
    pub unsafe_large: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }
}

/// Values given explicitly on the command line.
#[derive(Debug, Default)]
pub struct FlagConfig {
    pub max_degree: Option<usize>,
    pub order: Option<usize>,
    pub format: Option<Format>,
    pub unsafe_large: bool,
}

fn env_usize(key: &str, lookup: &dyn Fn(&str) -> Option<String>) -> Result<Option<usize>, String> {
    match lookup(key) {
        None => Ok(None),
        Some(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{key} must be a nonnegative integer, got {v:?}")),
    }
}

impl CliConfig {
    pub fn resolve(
        flags: &FlagConfig,
        file: Option<&FileConfig>,
        lookup: &dyn Fn(&str) -> Option<String>,
    ) -> Result<Self, String> {
        let empty = FileConfig::default();
        let file = file.unwrap_or(&empty);
        let max_degree = flags
            .max_degree
            .or(env_usize("TREECALC_MAX_DEGREE", lookup)?)
            .or(file.max_degree)
            .unwrap_or(DEFAULT_MAX_DEGREE);
        let truncation_order = flags
            .order
            .or(env_usize("TREECALC_ORDER", lookup)?)
            .or(file.order)
            .unwrap_or(DEFAULT_ORDER);
        Ok(Self {
            max_degree,
            truncation_order,
            output_format: flags.format.or(file.format).unwrap_or_default(),
            unsafe_large: flags.unsafe_large || file.unsafe_large.unwrap_or(false),
        })
    }
}
