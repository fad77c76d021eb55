//! Plain `key = value` generator configuration.
//!
//! Recognized keys: `n_cells`, `m_set` (comma-separated), `seed.t`, or
//! `seed.x0` (cell bits, cell 1 first) with `seed.y0` (decimal literal), and
//! `emit_initial`. Blank lines and lines starting with `#` are ignored. Every
//! key is optional so that command-line flags can fill the gaps.

use std::fmt::Write;

use chaotic_prng::bits::{parse_ascii, to_ascii};
use chaotic_prng::generator::MAX_CELLS;
use chaotic_prng::{CellState, GapSet, GeneratorConfig, SeedSpec};
use thiserror::Error;

use crate::scheme::join;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigFileError {
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: key `{key}` given twice")]
    Duplicate { line: usize, key: String },
    #[error("line {line}: bad value for `{key}`: {reason}")]
    Value {
        line: usize,
        key: String,
        reason: String,
    },
    #[error("seed.x0 and seed.y0 must be given together, and not with seed.t")]
    SeedShape,
}

/// Settings read from a configuration file; absent keys stay `None`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PartialConfig {
    pub n_cells: Option<usize>,
    pub m_set: Option<GapSet>,
    pub seed: Option<SeedSpec>,
    pub emit_initial: Option<bool>,
}

pub fn parse_config(text: &str) -> Result<PartialConfig, ConfigFileError> {
    let mut out = PartialConfig::default();
    let mut t = None;
    let mut x0 = None;
    let mut y0 = None;
    let mut seen: Vec<&str> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed
            .split_once('=')
            .ok_or(ConfigFileError::Syntax { line })?;
        let (key, value) = (key.trim(), value.trim());
        if seen.contains(&key) {
            return Err(ConfigFileError::Duplicate {
                line,
                key: key.to_owned(),
            });
        }
        seen.push(key);
        let bad = |reason: String| ConfigFileError::Value {
            line,
            key: key.to_owned(),
            reason,
        };
        match key {
            "n_cells" => out.n_cells = Some(value.parse().map_err(|e| bad(format!("{e}")))?),
            "m_set" => out.m_set = Some(parse_gap_list(value).map_err(bad)?),
            "seed.t" => t = Some(value.parse::<u64>().map_err(|e| bad(format!("{e}")))?),
            "seed.x0" => x0 = Some(parse_cells(value).map_err(bad)?),
            "seed.y0" => y0 = Some(value.parse::<f64>().map_err(|e| bad(format!("{e}")))?),
            "emit_initial" => {
                out.emit_initial = Some(value.parse().map_err(|e| bad(format!("{e}")))?)
            }
            _ => {
                return Err(ConfigFileError::UnknownKey {
                    line,
                    key: key.to_owned(),
                })
            }
        }
    }
    out.seed = match (t, x0, y0) {
        (None, None, None) => None,
        (Some(t), None, None) => Some(SeedSpec::TimeDerived { t }),
        (None, Some(x0), Some(y0)) => Some(SeedSpec::Explicit { x0, y0 }),
        _ => return Err(ConfigFileError::SeedShape),
    };
    Ok(out)
}

/// Comma-separated return gaps, e.g. `14,15`.
pub fn parse_gap_list(text: &str) -> Result<GapSet, String> {
    let values = text
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<u32>()
                .map_err(|e| format!("`{}`: {e}", v.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    GapSet::new(values).map_err(|e| e.to_string())
}

/// Cell bits as `0`/`1` characters, cell 1 first.
pub fn parse_cells(text: &str) -> Result<CellState, String> {
    let bits = parse_ascii(text).ok_or_else(|| format!("`{text}` is not a 0/1 string"))?;
    if bits.is_empty() || bits.len() > MAX_CELLS {
        return Err(format!(
            "expected 1 to {MAX_CELLS} cells, got {}",
            bits.len()
        ));
    }
    Ok(CellState::from_bits(&bits))
}

/// Serializes `config` in the format read by [`parse_config`].
pub fn render_config(config: &GeneratorConfig) -> String {
    let mut out = String::new();
    writeln!(out, "n_cells = {}", config.n_cells()).unwrap();
    writeln!(out, "m_set = {}", join(config.gaps().as_slice())).unwrap();
    match config.seed() {
        SeedSpec::TimeDerived { t } => writeln!(out, "seed.t = {t}").unwrap(),
        SeedSpec::Explicit { x0, y0 } => {
            writeln!(out, "seed.x0 = {}", to_ascii(&x0.to_vec())).unwrap();
            // shortest representation that parses back to the same value
            writeln!(out, "seed.y0 = {y0:?}").unwrap();
        }
    }
    writeln!(out, "emit_initial = {}", config.emit_initial()).unwrap();
    out
}
