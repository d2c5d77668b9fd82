//! Run configuration: command-line flags merged over an optional JSON
//! config file, with flags taking precedence.

use std::path::PathBuf;
use std::str::FromStr;

use clap::Args;
use serde::Deserialize;

use crate::CliError;

/// Flags shared by every subcommand. Each command validates the subset it
/// actually needs.
#[derive(Args, Clone, Debug, Default)]
pub struct CommandArgs {
    /// Boost rapidity
    #[arg(long)]
    pub eta: Option<f64>,

    /// Rapidity sweep start:stop:steps (inclusive endpoints)
    #[arg(long, value_name = "A:B:N")]
    pub eta_range: Option<String>,

    /// Temperature sweep start:stop:steps (inclusive endpoints)
    #[arg(long, value_name = "A:B:N")]
    pub temp_range: Option<String>,

    /// Grid half-width override (default: 6·e^|eta|)
    #[arg(long)]
    pub half_width: Option<f64>,

    /// Grid points per axis override
    #[arg(long)]
    pub n_points: Option<usize>,

    /// Also compute the numeric partial-trace entropy column
    #[arg(long)]
    pub numeric: bool,

    /// Output format
    #[arg(long, value_parser = ["csv", "json"])]
    pub format: Option<String>,

    /// Output file path
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// JSON config file; flags override its values
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Emit the parton axis in the boost-stabilized variable q_u/(e^eta·√2)
    #[arg(long)]
    pub scaled: bool,
}

/// JSON mirror of the flag set.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    eta: Option<f64>,
    eta_range: Option<String>,
    temp_range: Option<String>,
    half_width: Option<f64>,
    n_points: Option<usize>,
    numeric: Option<bool>,
    format: Option<String>,
    out: Option<String>,
    scaled: Option<bool>,
}

/// Inclusive linear sweep a..b with n ≥ 2 points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSpec {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl RangeSpec {
    pub fn values(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|k| self.start + (self.stop - self.start) * k as f64 / (n - 1) as f64)
            .collect()
    }
}

impl FromStr for RangeSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.split(':').collect();
        let err = || CliError::Usage(format!("range '{s}' must have the form start:stop:steps"));
        if parts.len() != 3 {
            return Err(err());
        }
        let start: f64 = parts[0].parse().map_err(|_| err())?;
        let stop: f64 = parts[1].parse().map_err(|_| err())?;
        let steps: usize = parts[2].parse().map_err(|_| err())?;
        if !start.is_finite() || !stop.is_finite() {
            return Err(CliError::Usage(format!(
                "range '{s}' endpoints must be finite"
            )));
        }
        if steps < 2 {
            return Err(CliError::Usage(format!(
                "range '{s}' needs at least 2 steps"
            )));
        }
        Ok(RangeSpec { start, stop, steps })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(CliError::Usage(format!(
                "format must be 'csv' or 'json', got '{other}'"
            ))),
        }
    }
}

/// Fully merged and syntactically validated configuration.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub eta: Option<f64>,
    pub eta_range: Option<RangeSpec>,
    pub temp_range: Option<RangeSpec>,
    pub half_width: Option<f64>,
    pub n_points: Option<usize>,
    pub numeric: bool,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub scaled: bool,
}

impl RunConfig {
    pub fn require_eta(&self) -> Result<f64, CliError> {
        self.eta
            .ok_or_else(|| CliError::Usage("--eta is required for this command".to_string()))
    }

    pub fn require_eta_range(&self) -> Result<RangeSpec, CliError> {
        self.eta_range
            .ok_or_else(|| CliError::Usage("--eta-range is required for this command".to_string()))
    }

    pub fn require_temp_range(&self) -> Result<RangeSpec, CliError> {
        self.temp_range.ok_or_else(|| {
            CliError::Usage("--temp-range is required for this command".to_string())
        })
    }

    pub fn require_out(&self) -> Result<&PathBuf, CliError> {
        self.out
            .as_ref()
            .ok_or_else(|| CliError::Usage("--out is required for this command".to_string()))
    }
}

/// Loads the optional config file and merges the flags over it.
pub fn resolve(args: &CommandArgs) -> Result<RunConfig, CliError> {
    let file: FileConfig = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Usage(format!("cannot read config {}: {e}", path.display()))
            })?;
            serde_json::from_str(&text).map_err(|e| {
                CliError::Usage(format!("invalid config {}: {e}", path.display()))
            })?
        }
        None => FileConfig::default(),
    };

    let eta = args.eta.or(file.eta);
    if let Some(v) = eta {
        if !v.is_finite() {
            return Err(CliError::Usage(format!("eta must be finite, got {v}")));
        }
    }
    let half_width = args.half_width.or(file.half_width);
    if let Some(v) = half_width {
        if !v.is_finite() || v <= 0.0 {
            return Err(CliError::Usage(format!(
                "half_width must be positive and finite, got {v}"
            )));
        }
    }
    let n_points = args.n_points.or(file.n_points);
    if let Some(n) = n_points {
        if n < 8 {
            return Err(CliError::Usage(format!(
                "n_points must be at least 8, got {n}"
            )));
        }
    }

    let eta_range = args
        .eta_range
        .as_deref()
        .or(file.eta_range.as_deref())
        .map(RangeSpec::from_str)
        .transpose()?;
    let temp_range = args
        .temp_range
        .as_deref()
        .or(file.temp_range.as_deref())
        .map(RangeSpec::from_str)
        .transpose()?;
    let format = args
        .format
        .as_deref()
        .or(file.format.as_deref())
        .map(OutputFormat::from_str)
        .transpose()?
        .unwrap_or_default();
    let out = args.out.clone().or(file.out.map(PathBuf::from));

    Ok(RunConfig {
        eta,
        eta_range,
        temp_range,
        half_width,
        n_points,
        numeric: args.numeric || file.numeric.unwrap_or(false),
        format,
        out,
        scaled: args.scaled || file.scaled.unwrap_or(false),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parses_and_sweeps_inclusively() {
        let r: RangeSpec = "0:2:5".parse().unwrap();
        assert_eq!(r.values(), vec![0.0, 0.5, 1.0, 1.5, 2.0]);
    }

    #[test]
    fn malformed_ranges_are_usage_errors() {
        assert!(RangeSpec::from_str("0:2").is_err());
        assert!(RangeSpec::from_str("0:2:1").is_err());
        assert!(RangeSpec::from_str("a:2:5").is_err());
        assert!(RangeSpec::from_str("0:inf:5").is_err());
    }

    #[test]
    fn flags_override_file_values() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        std::fs::write(&path, r#"{"eta": 1.0, "n_points": 64, "numeric": true}"#).unwrap();
        let args = CommandArgs {
            eta: Some(0.0),
            config: Some(path),
            ..CommandArgs::default()
        };
        let cfg = resolve(&args).unwrap();
        assert_eq!(cfg.eta, Some(0.0));
        assert_eq!(cfg.n_points, Some(64));
        assert!(cfg.numeric);
    }

    #[test]
    fn nonfinite_eta_is_rejected() {
        let args = CommandArgs {
            eta: Some(f64::NAN),
            ..CommandArgs::default()
        };
        assert!(matches!(resolve(&args), Err(CliError::Usage(_))));
    }

    #[test]
    fn unknown_config_keys_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        std::fs::write(&path, r#"{"granularity": 3}"#).unwrap();
        let args = CommandArgs {
            config: Some(path),
            ..CommandArgs::default()
        };
        assert!(matches!(resolve(&args), Err(CliError::Usage(_))));
    }
}
