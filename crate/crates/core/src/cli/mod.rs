//! The `cerenkov` command-line frontend.
//!
//! Exit codes: `0` success, `1` usage, parse or I/O failure, `2` a domain
//! error (no cone below threshold, divergent Weber integral, frequency
//! outside a dispersion table, ...). The CLI only wires library calls
//! together; every number it prints comes straight from [`crate::radiation`],
//! [`crate::quadrature`] or [`crate::dispersion`].

mod args;
mod output;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

pub use args::{parse_args, Command, GridSpec, IndexSource, OmegaSpec, OutputFormat, RunConfig, VerifyTarget};
pub use output::{render_svg, spectrum_json, write_spectrum_csv, write_spectrum_csv_to, ARTIFACT_VERSION, CSV_HEADER};

use crate::dispersion::{find_radiating_band, DispersionError, DispersionKind, DispersionModel};
use crate::grid::FrequencyGrid;
use crate::medium::{cherenkov_parameter, Medium, ThresholdStatus};
use crate::quadrature::{weber_closed_form, weber_integral, QuadError};
use crate::radiation::{
    cone_angle_3d, photon_rate, scan_spectrum, spectral_power_2d_closed, spectral_power_2d_numeric, spectral_power_3d,
    spectral_power_3d_numeric, Dimensionality, RadiationError,
};
use crate::units::UnitSystem;

#[derive(Debug, Error)]
pub enum CliError {
    /// `--help` or `--version` output; not a failure.
    #[error("{0}")]
    Help(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Help(_) => 0,
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Domain(_) => 2,
        }
    }
}

impl From<RadiationError> for CliError {
    fn from(e: RadiationError) -> Self {
        match &e {
            RadiationError::Model(_) | RadiationError::InvalidTolerance(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<QuadError> for CliError {
    fn from(e: QuadError) -> Self {
        match &e {
            QuadError::InvalidInput(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

fn loading_error(path: &Path, e: DispersionError) -> CliError {
    let msg = format!("--dispersion-file {}: {e}", path.display());
    match e {
        DispersionError::Io(_) => CliError::Io(msg),
        _ => CliError::Usage(msg),
    }
}

fn io_error(what: &str, path: &Path, e: io::Error) -> CliError {
    CliError::Io(format!("{what} {}: {e}", path.display()))
}

/// Entry point used by the binary: parse, run, report, return the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = match parse_args(argv) {
        Ok(config) => run_with(&config, &mut stdout.lock(), &mut stderr.lock()),
        Err(CliError::Help(text)) => {
            let _ = write!(stdout.lock(), "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr.lock(), "error: {e}");
            e.exit_code()
        }
    };
    let _ = stdout.lock().flush();
    code
}

/// Runs `config` against the process's stdout and stderr.
pub fn run(config: &RunConfig) -> i32 {
    run_with(config, &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// Runs `config`, writing results to `out` and diagnostics to `err`.
pub fn run_with(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_model(config: &RunConfig) -> Result<DispersionModel, CliError> {
    match config.index.as_ref().expect("index validated at parse time") {
        IndexSource::Constant(n) => DispersionModel::constant(*n).map_err(|e| CliError::Usage(format!("--n: {e}"))),
        IndexSource::File(path) => DispersionModel::from_csv_path(path).map_err(|e| loading_error(path, e)),
    }
}

fn medium_at(config: &RunConfig, model: &DispersionModel, omega: f64) -> Result<Medium, CliError> {
    Medium::from_dispersion(model, omega, config.mu)
        .map_err(|e| CliError::Domain(format!("dispersion model failed at omega = {omega}: {e}")))
}

fn write_out(config: &RunConfig, out: &mut dyn Write, bytes: &[u8]) -> Result<(), CliError> {
    match &config.output_path {
        Some(path) => fs::write(path, bytes).map_err(|e| io_error("--output", path, e)),
        None => out.write_all(bytes).map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let units = UnitSystem::from_mode(config.unit_mode);
    let text = match config.command {
        Command::Spectrum => return spectrum(config, &units, out),
        Command::Threshold => threshold(config)?,
        Command::ConeAngle => cone_angle(config)?,
        Command::Verify(VerifyTarget::Weber { a, b }) => verify_weber(a, b, config.tolerance)?,
        Command::Verify(target) => verify_power(config, target, &units)?,
        Command::PhotonRate { power } => photon_rate_cmd(config, power, &units)?,
    };
    out.write_all(text.as_bytes()).map_err(|e| CliError::Io(format!("stdout: {e}")))
}

#[derive(Serialize)]
struct Inputs<'a> {
    dim: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dispersion_file: Option<&'a str>,
    mu: f64,
    beta: f64,
    charge: f64,
    omega_min: f64,
    omega_max: f64,
    points: usize,
    spacing: &'static str,
}

fn spectrum(config: &RunConfig, units: &UnitSystem, out: &mut dyn Write) -> Result<(), CliError> {
    let model = load_model(config)?;
    let spec = config.grid().expect("grid validated at parse time");
    let grid = spec.build();
    let particle = config.particle();
    let result =
        scan_spectrum(config.dimensionality, &model, config.mu, &particle, &grid, units, config.doubled_prefactor)?;

    let bytes = match config.output_format {
        OutputFormat::Csv => {
            let mut buf = Vec::new();
            write_spectrum_csv_to(&result, &mut buf).map_err(|e| CliError::Io(e.to_string()))?;
            buf
        }
        OutputFormat::Json => {
            let (n, dispersion_file) = match config.index.as_ref().unwrap() {
                IndexSource::Constant(n) => (Some(*n), None),
                IndexSource::File(p) => (None, p.to_str()),
            };
            let inputs = Inputs {
                dim: match config.dimensionality {
                    Dimensionality::TwoD => 2,
                    Dimensionality::ThreeD => 3,
                },
                n,
                dispersion_file,
                mu: config.mu,
                beta: particle.beta(),
                charge: particle.charge_multiple(),
                omega_min: spec.min,
                omega_max: spec.max,
                points: spec.points,
                spacing: if spec.log { "log" } else { "linear" },
            };
            spectrum_json(&result, inputs).into_bytes()
        }
    };
    write_out(config, out, &bytes)?;

    if let Some(path) = &config.plot_path {
        let svg = render_svg(&result).expect("grid has at least two points");
        fs::write(path, svg).map_err(|e| io_error("--plot", path, e))?;
    }
    Ok(())
}

fn threshold(config: &RunConfig) -> Result<String, CliError> {
    let model = load_model(config)?;
    let particle = config.particle();
    let mut s = String::new();
    if let DispersionKind::Constant { n } = model.kind() {
        let x = cherenkov_parameter(&config.medium(*n), &particle);
        let status = match ThresholdStatus::classify(x) {
            ThresholdStatus::Below => "below threshold (no radiation)",
            ThresholdStatus::AtThreshold => "at threshold (no radiation)",
            ThresholdStatus::Above => "above threshold (radiating)",
        };
        s.push_str(&format!("n*beta = {x}\nstatus: {status}\n"));
        return Ok(s);
    }

    let grid = match (config.grid(), model.kind()) {
        (Some(spec), _) => spec.build(),
        (None, DispersionKind::Tabulated { omega, .. }) => {
            // linear interpolation cannot cross the threshold twice between nodes
            FrequencyGrid::new(omega.clone()).map_err(|e| CliError::Usage(format!("--dispersion-file: {e}")))?
        }
        (None, _) => return Err(CliError::Usage("threshold needs --omega min:max:count for this model".into())),
    };
    let bands =
        find_radiating_band(&model, &particle, &grid, config.tolerance).map_err(|e| CliError::Domain(e.to_string()))?;
    s.push_str(&format!("radiating bands for beta = {} on [{}, {}]:\n", particle.beta(), grid.min(), grid.max()));
    if bands.is_empty() {
        s.push_str("none\n");
    }
    for (lo, hi) in bands {
        s.push_str(&format!("{lo} {hi}\n"));
    }
    Ok(s)
}

fn cone_angle(config: &RunConfig) -> Result<String, CliError> {
    if config.dimensionality == Dimensionality::TwoD {
        return Err(CliError::Domain("there is no Cerenkov cone for a charge moving along a 2D sheet".into()));
    }
    let model = load_model(config)?;
    let omega = config.single_omega().unwrap_or(1.0);
    let medium = match model.kind() {
        DispersionKind::Constant { n } => config.medium(*n),
        _ => medium_at(config, &model, omega)?,
    };
    let cone = cone_angle_3d(&medium, &config.particle())?;
    Ok(format!("theta = {} rad\ntheta = {} deg\ncos(theta) = {}\n", cone.theta(), cone.degrees(), cone.cos()))
}

fn verify_weber(a: f64, b: f64, tol: f64) -> Result<String, CliError> {
    let closed = weber_closed_form(a, b)?;
    let numeric = weber_integral(a, b, tol)?;
    Ok(format!(
        "numeric      {:.12}\nclosed-form  {}\nabs diff     {:e}\nerror est    {:e}\nconverged    {}\n",
        numeric.value,
        closed,
        (numeric.value - closed).abs(),
        numeric.abs_error_estimate,
        numeric.converged
    ))
}

fn verify_power(config: &RunConfig, target: VerifyTarget, units: &UnitSystem) -> Result<String, CliError> {
    let model = load_model(config)?;
    let omega = config.single_omega().expect("omega validated at parse time");
    let medium = medium_at(config, &model, omega)?;
    let particle = config.particle();
    let (numeric, closed) = match target {
        VerifyTarget::Sheet => (
            spectral_power_2d_numeric(&medium, &particle, omega, config.tolerance, units)?,
            spectral_power_2d_closed(&medium, &particle, false, units),
        ),
        VerifyTarget::Bulk => (
            spectral_power_3d_numeric(&medium, &particle, omega, config.tolerance, units)?,
            spectral_power_3d(&medium, &particle, omega, units)?,
        ),
        VerifyTarget::Weber { .. } => unreachable!(),
    };
    let diff = (numeric - closed).abs();
    let rel = if closed == 0.0 { f64::NAN } else { diff / closed.abs() };
    Ok(format!("numeric      {numeric:e}\nclosed-form  {closed:e}\nabs diff     {diff:e}\nrel diff     {rel:e}\n"))
}

fn photon_rate_cmd(config: &RunConfig, power: Option<f64>, units: &UnitSystem) -> Result<String, CliError> {
    let omega = config.single_omega().expect("omega validated at parse time");
    let power = match power {
        Some(p) => p,
        None => {
            let model = load_model(config)?;
            let medium = medium_at(config, &model, omega)?;
            let particle = config.particle();
            match config.dimensionality {
                Dimensionality::TwoD => spectral_power_2d_closed(&medium, &particle, config.doubled_prefactor, units),
                Dimensionality::ThreeD => spectral_power_3d(&medium, &particle, omega, units)?,
            }
        }
    };
    Ok(format!("power_density = {power}\nphoton_rate_density = {}\n", photon_rate(power, omega, units)))
}
