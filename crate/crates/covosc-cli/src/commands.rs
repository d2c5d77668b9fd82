//! Subcommand implementations: each resolves its configuration, runs the
//! library, and writes a CSV or JSON data file.
//!
//! Output is deterministic: float fields use shortest round-trip
//! formatting, CSV carries a single header line, and JSON field order is
//! fixed by the serialized structs.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use covosc::entropy::{
    density_spectrum, entropy_closed_form, reduce_over_time, temperature_from_rapidity,
    velocity_temperature_curve, von_neumann_entropy,
};
use covosc::oscillator::{ellipse_axes, sample_probability_grid, DEFAULT_GRID_POINTS};
use covosc::parton::longitudinal_parton_density;
use covosc::validate::{run_suite, SuiteConfig};
use covosc::{GridSpec, LightconeAxis, Rapidity};

use crate::config::{OutputFormat, RunConfig};
use crate::CliError;

/// Default per-axis points for reduced-kernel commands.
const DEFAULT_KERNEL_POINTS: usize = 256;

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Usage(format!("serialization failed: {e}")))
}

/// Grid for a single-eta command: policy width 6·e^|eta| unless overridden.
fn resolve_grid(
    config: &RunConfig,
    rapidity: Rapidity,
    default_points: usize,
) -> Result<GridSpec, CliError> {
    let n = config.n_points.unwrap_or(default_points);
    match config.half_width {
        Some(l) => Ok(GridSpec::new(l, n)?),
        None => Ok(GridSpec::for_rapidity_with_points(rapidity, n)?),
    }
}

#[derive(Serialize)]
struct EllipseRecord {
    eta: f64,
    major_axis: f64,
    minor_axis: f64,
    orientation: &'static str,
}

#[derive(Serialize)]
struct GridRecord {
    half_width: f64,
    n_points: usize,
}

#[derive(Serialize)]
struct SqueezeGridDocument {
    eta: f64,
    ellipse: EllipseRecord,
    grid_z: GridRecord,
    grid_t: GridRecord,
    z: Vec<f64>,
    t: Vec<f64>,
    density: Vec<Vec<f64>>,
}

fn axis_name(axis: LightconeAxis) -> &'static str {
    match axis {
        LightconeAxis::U => "u",
        LightconeAxis::V => "v",
    }
}

/// `squeeze-grid`: |ψ_η|² on a (z, t) grid plus the squeeze-ellipse record.
/// CSV output writes the ellipse to a `<out>.axes.json` sidecar; JSON
/// embeds it.
pub fn squeeze_grid(config: &RunConfig) -> Result<(), CliError> {
    let rapidity = Rapidity::new(config.require_eta()?)?;
    let out = config.require_out()?;
    let grid = resolve_grid(config, rapidity, DEFAULT_GRID_POINTS)?;
    let field = sample_probability_grid(rapidity, grid, grid)?;
    let ellipse = ellipse_axes(rapidity);
    let record = EllipseRecord {
        eta: rapidity.eta(),
        major_axis: ellipse.major_axis,
        minor_axis: ellipse.minor_axis,
        orientation: axis_name(ellipse.orientation),
    };

    match config.format {
        OutputFormat::Csv => {
            let z = grid.points();
            let t = grid.points();
            let mut csv = String::from("z,t,density\n");
            for (i, &zi) in z.iter().enumerate() {
                for (j, &tj) in t.iter().enumerate() {
                    writeln!(csv, "{zi},{tj},{}", field.value(i, j)).unwrap();
                }
            }
            write_file(out, &csv)?;
            let sidecar = out.with_extension("axes.json");
            write_file(&sidecar, &to_json(&record)?)?;
        }
        OutputFormat::Json => {
            let n = grid.n_points();
            let density: Vec<Vec<f64>> = (0..n)
                .map(|i| (0..n).map(|j| field.value(i, j)).collect())
                .collect();
            let doc = SqueezeGridDocument {
                eta: rapidity.eta(),
                ellipse: record,
                grid_z: GridRecord {
                    half_width: grid.half_width(),
                    n_points: n,
                },
                grid_t: GridRecord {
                    half_width: grid.half_width(),
                    n_points: n,
                },
                z: grid.points(),
                t: grid.points(),
                density,
            };
            write_file(out, &to_json(&doc)?)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct EntropyRow {
    eta: f64,
    s_closed_form: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_numeric: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    abs_diff: Option<f64>,
    temperature: f64,
}

/// `entropy-table`: closed-form entropy over a rapidity sweep, with the
/// numeric partial-trace column when `--numeric` is set.
pub fn entropy_table(config: &RunConfig) -> Result<(), CliError> {
    let range = config.require_eta_range()?;
    let out = config.require_out()?;
    let mut rows = Vec::with_capacity(range.steps);
    for eta in range.values() {
        let rapidity = Rapidity::new(eta)?;
        let s_closed = entropy_closed_form(rapidity);
        let s_numeric = if config.numeric {
            let grid = resolve_grid(config, rapidity, DEFAULT_KERNEL_POINTS)?;
            let spectrum = density_spectrum(&reduce_over_time(rapidity, grid)?)?;
            Some(von_neumann_entropy(&spectrum))
        } else {
            None
        };
        rows.push(EntropyRow {
            eta,
            s_closed_form: s_closed,
            s_numeric,
            abs_diff: s_numeric.map(|s| (s - s_closed).abs()),
            temperature: temperature_from_rapidity(rapidity).temperature(),
        });
    }

    match config.format {
        OutputFormat::Csv => {
            let mut csv = String::new();
            if config.numeric {
                csv.push_str("eta,S_closed_form,S_numeric,abs_diff,T\n");
                for r in &rows {
                    writeln!(
                        csv,
                        "{},{},{},{},{}",
                        r.eta,
                        r.s_closed_form,
                        r.s_numeric.unwrap(),
                        r.abs_diff.unwrap(),
                        r.temperature
                    )
                    .unwrap();
                }
            } else {
                csv.push_str("eta,S_closed_form,T\n");
                for r in &rows {
                    writeln!(csv, "{},{},{}", r.eta, r.s_closed_form, r.temperature).unwrap();
                }
            }
            write_file(out, &csv)?;
        }
        OutputFormat::Json => write_file(out, &to_json(&rows)?)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct SpectrumDocument {
    eta: f64,
    probabilities: Vec<f64>,
}

/// `spectrum`: eigenvalue distribution of the reduced density kernel.
pub fn spectrum(config: &RunConfig) -> Result<(), CliError> {
    let rapidity = Rapidity::new(config.require_eta()?)?;
    let out = config.require_out()?;
    let grid = resolve_grid(config, rapidity, DEFAULT_KERNEL_POINTS)?;
    let spectrum = density_spectrum(&reduce_over_time(rapidity, grid)?)?;

    match config.format {
        OutputFormat::Csv => {
            let mut csv = String::from("n,probability\n");
            for (n, p) in spectrum.probs().iter().enumerate() {
                writeln!(csv, "{n},{p}").unwrap();
            }
            write_file(out, &csv)?;
        }
        OutputFormat::Json => {
            let doc = SpectrumDocument {
                eta: rapidity.eta(),
                probabilities: spectrum.probs().to_vec(),
            };
            write_file(out, &to_json(&doc)?)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PartonDocument {
    eta: f64,
    scaled: bool,
    axis: Vec<f64>,
    density: Vec<f64>,
}

/// `parton`: longitudinal parton density against q_u, or against the
/// boost-stabilized variable q_u/(e^η √2) with `--scaled`.
pub fn parton(config: &RunConfig) -> Result<(), CliError> {
    let rapidity = Rapidity::new(config.require_eta()?)?;
    let out = config.require_out()?;
    let axis = resolve_grid(config, rapidity, DEFAULT_GRID_POINTS)?;
    let density = longitudinal_parton_density(rapidity, axis)?;

    let (axis_label, table): (&str, Vec<(f64, f64)>) = if config.scaled {
        ("q_u_scaled", density.scaled_variable_table())
    } else {
        (
            "q_u",
            density
                .axis()
                .iter()
                .copied()
                .zip(density.density().iter().copied())
                .collect(),
        )
    };

    match config.format {
        OutputFormat::Csv => {
            let mut csv = format!("{axis_label},density\n");
            for (q, d) in &table {
                writeln!(csv, "{q},{d}").unwrap();
            }
            write_file(out, &csv)?;
        }
        OutputFormat::Json => {
            let doc = PartonDocument {
                eta: rapidity.eta(),
                scaled: config.scaled,
                axis: table.iter().map(|r| r.0).collect(),
                density: table.iter().map(|r| r.1).collect(),
            };
            write_file(out, &to_json(&doc)?)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TempCurveRow {
    temperature: f64,
    beta_squared: f64,
    eta: f64,
}

/// `temp-curve`: β²(T) = exp(−1/T) over a temperature sweep.
pub fn temp_curve(config: &RunConfig) -> Result<(), CliError> {
    let range = config.require_temp_range()?;
    let out = config.require_out()?;
    let rows = velocity_temperature_curve(&range.values())?;

    match config.format {
        OutputFormat::Csv => {
            let mut csv = String::from("T,beta2,eta\n");
            for r in &rows {
                writeln!(csv, "{},{},{}", r.temperature, r.beta_squared, r.eta).unwrap();
            }
            write_file(out, &csv)?;
        }
        OutputFormat::Json => {
            let doc: Vec<TempCurveRow> = rows
                .iter()
                .map(|r| TempCurveRow {
                    temperature: r.temperature,
                    beta_squared: r.beta_squared,
                    eta: r.eta,
                })
                .collect();
            write_file(out, &to_json(&doc)?)?;
        }
    }
    Ok(())
}

/// `validate`: run the full invariant suite, print one line per check
/// with its tolerance, and fail with the accuracy exit code if any check
/// fails.
pub fn validate(config: &RunConfig) -> Result<(), CliError> {
    let suite_config = match config.n_points {
        Some(n) => SuiteConfig::with_points(n),
        None => SuiteConfig::default(),
    };
    let outcomes = run_suite(&suite_config);
    for check in &outcomes {
        let verdict = if check.passed { "PASS" } else { "FAIL" };
        println!(
            "{verdict}  {id:<28} observed {observed:>10.3e}  tolerance {tolerance:>8.1e}  {detail}",
            id = check.id,
            observed = check.observed,
            tolerance = check.tolerance,
            detail = check.detail,
        );
    }
    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.id)
        .collect();
    if failed.is_empty() {
        println!("all {} checks passed", outcomes.len());
        Ok(())
    } else {
        println!("{} of {} checks failed", failed.len(), outcomes.len());
        Err(CliError::Accuracy(format!(
            "{} of {} checks failed: {}",
            failed.len(),
            outcomes.len(),
            failed.join(", ")
        )))
    }
}
