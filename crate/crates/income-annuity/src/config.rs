//! Plain `key=value` run configuration for the CLI. Flags override file
//! values; unknown keys are rejected outright.
//!
//! Recognized keys: `m`, `b`, `lambda`, `rate`, `loading`, `format`, `out`.

use std::path::{Path, PathBuf};

use crate::error::{AnnuityError, Result};
use crate::mortality::MortalityLaw;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(tag: &str) -> Result<Self> {
        match tag.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(AnnuityError::invalid(format!(
                "unknown output format '{other}' (expected csv or json)"
            ))),
        }
    }
}

/// Parsed configuration; every field optional so flag overrides compose.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub m: Option<f64>,
    pub b: Option<f64>,
    pub lambda: Option<f64>,
    pub rate: Option<f64>,
    pub loading: Option<f64>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut config = RunConfig::default();
        for (number, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(AnnuityError::invalid(format!(
                    "config line {} is not key=value: '{raw}'",
                    number + 1
                )));
            };
            let key = key.trim();
            let value = value.trim();
            let parse_f64 = |v: &str| -> Result<f64> {
                v.parse::<f64>().map_err(|_| {
                    AnnuityError::invalid(format!("config key '{key}' has non-numeric value '{v}'"))
                })
            };
            match key {
                "m" => config.m = Some(parse_f64(value)?),
                "b" => config.b = Some(parse_f64(value)?),
                "lambda" => config.lambda = Some(parse_f64(value)?),
                "rate" => config.rate = Some(parse_f64(value)?),
                "loading" => config.loading = Some(parse_f64(value)?),
                "format" => config.format = Some(OutputFormat::parse(value)?),
                "out" => config.out = Some(PathBuf::from(value)),
                unknown => {
                    return Err(AnnuityError::invalid(format!(
                        "unknown config key '{unknown}'"
                    )))
                }
            }
        }
        Ok(config)
    }

    /// Resolve the mortality law: Gompertz from `m`/`b`, exponential from
    /// `lambda`, or Gompertz(90, 10) when nothing is specified.
    pub fn law(&self) -> Result<MortalityLaw> {
        match (self.m, self.b, self.lambda) {
            (None, None, Some(lambda)) => MortalityLaw::exponential(lambda),
            (m, b, None) => MortalityLaw::gompertz(m.unwrap_or(90.0), b.unwrap_or(10.0)),
            _ => Err(AnnuityError::invalid(
                "specify either Gompertz parameters (m, b) or lambda, not both",
            )),
        }
    }
}
