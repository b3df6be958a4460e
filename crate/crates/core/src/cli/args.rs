//! Argument parsing and `--config` merging.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use super::CliError;
use crate::grid::FrequencyGrid;
use crate::medium::{Medium, Particle};
use crate::radiation::Dimensionality;
use crate::units::UnitMode;

#[derive(Debug, Parser)]
#[command(name = "cerenkov", version, about = "Vavilov-Cerenkov spectral power for sheet (2D) and bulk (3D) media")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Spectral power and photon rate over a frequency grid
    Spectrum {
        #[command(flatten)]
        medium: MediumArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Report whether the particle radiates, and over which frequency bands
    Threshold {
        #[command(flatten)]
        medium: MediumArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Half-angle of the bulk Cerenkov cone
    ConeAngle {
        #[command(flatten)]
        medium: MediumArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Compare quadrature against closed forms
    Verify {
        /// Weber integral of J0(a t) cos(b t) over (0, inf)
        #[arg(long, group = "target")]
        weber: bool,
        /// Sheet spectral power at one frequency
        #[arg(long, group = "target")]
        sheet: bool,
        /// Bulk spectral power at one frequency
        #[arg(long, group = "target")]
        bulk: bool,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        b: Option<f64>,
        #[command(flatten)]
        medium: MediumArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Photon emission rate per unit frequency, P / (hbar omega)
    PhotonRate {
        /// Use this power density instead of computing one
        #[arg(long, allow_negative_numbers = true)]
        power: Option<f64>,
        #[command(flatten)]
        medium: MediumArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
}

#[derive(Debug, Args)]
struct MediumArgs {
    /// TOML file whose keys mirror the flag names; flags take precedence
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// 2 (sheet) or 3 (bulk)
    #[arg(long)]
    dim: Option<u8>,
    /// Constant refractive index
    #[arg(long, conflicts_with = "dispersion_file", allow_negative_numbers = true)]
    n: Option<f64>,
    /// CSV table with header `omega,n`
    #[arg(long, value_name = "FILE")]
    dispersion_file: Option<PathBuf>,
    /// Relative permeability [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Particle speed in units of c
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// Charge in units of the elementary charge [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    charge: Option<f64>,
    #[arg(long, value_parser = ["reduced", "gaussian-cgs", "cgs"])]
    units: Option<String>,
    /// Use the doubled sheet prefactor
    #[arg(long)]
    doubled_prefactor: bool,
    /// Quadrature tolerance [default: 1e-8]
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct GridArgs {
    /// A single frequency, or a grid as min:max:count
    #[arg(long, value_name = "SPEC", allow_negative_numbers = true)]
    omega: Option<String>,
    /// Logarithmic grid spacing
    #[arg(long)]
    log: bool,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Write the table here instead of stdout
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Also write an SVG plot
    #[arg(long, value_name = "FILE")]
    plot: Option<PathBuf>,
}

/// Keys accepted in a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct ConfigFile {
    dim: Option<u8>,
    n: Option<f64>,
    dispersion_file: Option<PathBuf>,
    mu: Option<f64>,
    beta: Option<f64>,
    charge: Option<f64>,
    units: Option<String>,
    doubled_prefactor: Option<bool>,
    tol: Option<f64>,
    omega: Option<String>,
    log: Option<bool>,
    format: Option<OutputFormat>,
    output: Option<PathBuf>,
    plot: Option<PathBuf>,
    a: Option<f64>,
    b: Option<f64>,
    power: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum IndexSource {
    Constant(f64),
    File(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub log: bool,
}

impl GridSpec {
    pub fn build(&self) -> FrequencyGrid {
        let grid = if self.log {
            FrequencyGrid::logarithmic(self.min, self.max, self.points)
        } else {
            FrequencyGrid::linear(self.min, self.max, self.points)
        };
        grid.expect("grid validated at parse time")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OmegaSpec {
    Single(f64),
    Grid(GridSpec),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VerifyTarget {
    Weber { a: f64, b: f64 },
    Sheet,
    Bulk,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Command {
    Spectrum,
    Threshold,
    ConeAngle,
    Verify(VerifyTarget),
    PhotonRate { power: Option<f64> },
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub dimensionality: Dimensionality,
    pub index: Option<IndexSource>,
    pub mu: f64,
    pub beta: Option<f64>,
    pub charge_multiple: f64,
    pub omega: Option<OmegaSpec>,
    pub unit_mode: UnitMode,
    pub doubled_prefactor: bool,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub plot_path: Option<PathBuf>,
    pub tolerance: f64,
}

impl RunConfig {
    pub fn medium(&self, n: f64) -> Medium {
        Medium::new(n, self.mu).expect("medium validated at parse time")
    }

    pub fn particle(&self) -> Particle {
        Particle::new(self.charge_multiple, self.beta.expect("beta validated at parse time"))
            .expect("particle validated at parse time")
    }

    pub fn single_omega(&self) -> Option<f64> {
        match self.omega {
            Some(OmegaSpec::Single(w)) => Some(w),
            _ => None,
        }
    }

    pub fn grid(&self) -> Option<GridSpec> {
        match self.omega {
            Some(OmegaSpec::Grid(g)) => Some(g),
            _ => None,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses a full argv (program name first) into a [`RunConfig`].
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliError::Help(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    })?;

    let (command, medium, grid, output, a, b, power, target) = match cli.command {
        Sub::Spectrum { medium, grid, output } => ("spectrum", medium, grid, Some(output), None, None, None, None),
        Sub::Threshold { medium, grid } => ("threshold", medium, grid, None, None, None, None, None),
        Sub::ConeAngle { medium, grid } => ("cone-angle", medium, grid, None, None, None, None, None),
        Sub::Verify { weber, sheet, bulk, a, b, medium, grid } => {
            let target = match (weber, sheet, bulk) {
                (true, _, _) => "weber",
                (_, true, _) => "sheet",
                (_, _, true) => "bulk",
                _ => return Err(usage("verify needs one of --weber, --sheet or --bulk")),
            };
            ("verify", medium, grid, None, a, b, None, Some(target))
        }
        Sub::PhotonRate { power, medium, grid } => ("photon-rate", medium, grid, None, None, None, power, None),
    };

    let file = match &medium.config {
        Some(path) => {
            let text =
                fs::read_to_string(path).map_err(|e| CliError::Io(format!("--config {}: {e}", path.display())))?;
            toml::from_str::<ConfigFile>(&text).map_err(|e| usage(format!("--config {}: {e}", path.display())))?
        }
        None => ConfigFile::default(),
    };

    let n = medium.n.or(if medium.dispersion_file.is_none() { file.n } else { None });
    let dispersion_file = medium.dispersion_file.or(if medium.n.is_none() { file.dispersion_file } else { None });
    let index = match (n, dispersion_file) {
        (Some(_), Some(_)) => return Err(usage("--n and --dispersion-file are mutually exclusive")),
        (Some(n), None) => {
            Medium::with_index(n).map_err(|e| usage(format!("--n: {e}")))?;
            Some(IndexSource::Constant(n))
        }
        (None, Some(p)) => Some(IndexSource::File(p)),
        (None, None) => None,
    };

    let mu = medium.mu.or(file.mu).unwrap_or(1.0);
    Medium::new(1.0, mu).map_err(|e| usage(format!("--mu: {e}")))?;
    let beta = medium.beta.or(file.beta);
    let charge_multiple = medium.charge.or(file.charge).unwrap_or(1.0);
    if let Some(beta) = beta {
        Particle::with_beta(beta).map_err(|e| usage(format!("--beta: {e}")))?;
    }
    Particle::new(charge_multiple, 0.5).map_err(|e| usage(format!("--charge: {e}")))?;

    let dimensionality = match medium.dim.or(file.dim) {
        Some(2) => Dimensionality::TwoD,
        Some(3) => Dimensionality::ThreeD,
        Some(other) => return Err(usage(format!("--dim must be 2 or 3, got {other}"))),
        // the cone only exists in the bulk
        None if command == "cone-angle" => Dimensionality::ThreeD,
        None => Dimensionality::TwoD,
    };

    let unit_mode = match medium.units.or(file.units) {
        Some(s) => UnitMode::from_str(&s).map_err(|e| usage(format!("--units: {e}")))?,
        None => UnitMode::default(),
    };
    let doubled_prefactor = medium.doubled_prefactor || file.doubled_prefactor.unwrap_or(false);
    let tolerance = medium.tol.or(file.tol).unwrap_or(1e-8);
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(usage(format!("--tol must be finite and > 0, got {tolerance}")));
    }

    let log = grid.log || file.log.unwrap_or(false);
    let omega = grid.omega.or(file.omega).map(|s| parse_omega(&s, log)).transpose()?;

    let (output_format, output_path, plot_path) = match output {
        Some(o) => (o.format.or(file.format).unwrap_or_default(), o.output.or(file.output), o.plot.or(file.plot)),
        None => (OutputFormat::default(), None, None),
    };

    let need_index = |what: &str| -> Result<(), CliError> {
        if index.is_none() {
            return Err(usage(format!("{what} needs --n or --dispersion-file")));
        }
        if beta.is_none() {
            return Err(usage(format!("{what} needs --beta")));
        }
        Ok(())
    };
    let need_single = |what: &str| -> Result<(), CliError> {
        match omega {
            Some(OmegaSpec::Single(_)) => Ok(()),
            Some(OmegaSpec::Grid(_)) => Err(usage(format!("--omega: {what} takes a single frequency, not a grid"))),
            None => Err(usage(format!("{what} needs --omega"))),
        }
    };

    let command = match command {
        "spectrum" => {
            need_index("spectrum")?;
            if !matches!(omega, Some(OmegaSpec::Grid(_))) {
                return Err(usage("--omega: spectrum needs a grid min:max:count"));
            }
            Command::Spectrum
        }
        "threshold" => {
            need_index("threshold")?;
            if matches!(omega, Some(OmegaSpec::Single(_))) {
                return Err(usage("--omega: threshold takes a grid min:max:count"));
            }
            Command::Threshold
        }
        "cone-angle" => {
            need_index("cone-angle")?;
            if matches!(index, Some(IndexSource::File(_))) {
                need_single("cone-angle with --dispersion-file")?;
            }
            Command::ConeAngle
        }
        "verify" => match target {
            Some("weber") => {
                let a = a.or(file.a).ok_or_else(|| usage("verify --weber needs --a"))?;
                let b = b.or(file.b).ok_or_else(|| usage("verify --weber needs --b"))?;
                if !(a.is_finite() && a > 0.0) {
                    return Err(usage(format!("--a must be finite and > 0, got {a}")));
                }
                if !(b.is_finite() && b > 0.0) {
                    return Err(usage(format!("--b must be finite and > 0, got {b}")));
                }
                Command::Verify(VerifyTarget::Weber { a, b })
            }
            Some(which) => {
                need_index(&format!("verify --{which}"))?;
                need_single(&format!("verify --{which}"))?;
                Command::Verify(if which == "sheet" { VerifyTarget::Sheet } else { VerifyTarget::Bulk })
            }
            None => unreachable!(),
        },
        "photon-rate" => {
            let power = power.or(file.power);
            if power.is_none() {
                need_index("photon-rate without --power")?;
            }
            need_single("photon-rate")?;
            Command::PhotonRate { power }
        }
        _ => unreachable!(),
    };

    Ok(RunConfig {
        command,
        dimensionality,
        index,
        mu,
        beta,
        charge_multiple,
        omega,
        unit_mode,
        doubled_prefactor,
        output_format,
        output_path,
        plot_path,
        tolerance,
    })
}

fn parse_omega(spec: &str, log: bool) -> Result<OmegaSpec, CliError> {
    let number = |s: &str| -> Result<f64, CliError> {
        s.trim().parse::<f64>().map_err(|_| usage(format!("--omega: cannot parse '{s}' as a number")))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [single] => {
            let w = number(single)?;
            if !(w.is_finite() && w > 0.0) {
                return Err(usage(format!("--omega must be finite and > 0, got {w}")));
            }
            Ok(OmegaSpec::Single(w))
        }
        [min, max, count] => {
            let (min, max) = (number(min)?, number(max)?);
            let points: usize =
                count.trim().parse().map_err(|_| usage(format!("--omega: cannot parse '{count}' as a point count")))?;
            if points < 2 {
                return Err(usage(format!("--omega: need at least 2 points, got {points}")));
            }
            if !(min.is_finite() && max.is_finite() && min > 0.0 && min < max) {
                return Err(usage(format!("--omega: need 0 < min < max, got {min}:{max}")));
            }
            let spec = GridSpec { min, max, points, log };
            let grid = if log {
                FrequencyGrid::logarithmic(min, max, points)
            } else {
                FrequencyGrid::linear(min, max, points)
            };
            grid.map_err(|e| usage(format!("--omega: {e}")))?;
            Ok(OmegaSpec::Grid(spec))
        }
        _ => Err(usage(format!("--omega expects a number or min:max:count, got '{spec}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn parse(s: &str) -> Result<RunConfig, CliError> {
        parse_args(std::iter::once("cerenkov").chain(s.split_whitespace()))
    }

    #[test]
    fn spectrum_echo() {
        let c = parse("spectrum --dim 2 --n 1.5 --beta 0.8 --omega 1:100:50").unwrap();
        assert_eq!(c.command, Command::Spectrum);
        assert_eq!(c.dimensionality, Dimensionality::TwoD);
        assert_eq!(c.index, Some(IndexSource::Constant(1.5)));
        assert_eq!(c.beta, Some(0.8));
        assert_eq!(c.mu, 1.0);
        assert_eq!(c.charge_multiple, 1.0);
        assert_eq!(c.omega, Some(OmegaSpec::Grid(GridSpec { min: 1.0, max: 100.0, points: 50, log: false })));
        assert_eq!(c.unit_mode, UnitMode::Reduced);
        assert!(!c.doubled_prefactor);
        assert_eq!(c.output_format, OutputFormat::Csv);
        assert_eq!(c.tolerance, 1e-8);
    }

    #[test]
    fn index_sources_are_exclusive() {
        let err = parse("spectrum --n 1.5 --dispersion-file d.csv --beta 0.8 --omega 1:2:3").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("--n") && msg.contains("--dispersion-file"), "{msg}");
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn cone_angle_parses_even_below_threshold() {
        let c = parse("cone-angle --n 1.5 --beta 0.5").unwrap();
        assert_eq!(c.command, Command::ConeAngle);
        assert_eq!(c.dimensionality, Dimensionality::ThreeD);
    }

    #[test]
    fn rejections_name_the_flag() {
        for (args, flag) in [
            ("spectrum --n 1.5 --beta 1.2 --omega 1:2:3", "--beta"),
            ("spectrum --n 1.5 --beta 0.8 --omega 2:1:3", "--omega"),
            ("spectrum --n 1.5 --beta 0.8 --omega 1:2:1", "--omega"),
            ("spectrum --n 1.5 --beta 0.8", "--omega"),
            ("spectrum --n 1.5 --omega 1:2:3", "--beta"),
            ("spectrum --n -1 --beta 0.5 --omega 1:2:3", "--n"),
            ("spectrum --n 1.5 --beta 0.8 --omega 1:2:3 --dim 4", "--dim"),
            ("spectrum --n 1.5 --beta 0.8 --omega 1:2:3 --bogus", "--bogus"),
            ("spectrum --n 1.5 --beta 0.8 --omega 1:2:3 --tol 0", "--tol"),
            ("verify --weber --a 5", "--b"),
            ("photon-rate --power 1", "--omega"),
        ] {
            let err = parse(args).unwrap_err();
            assert!(err.to_string().contains(flag), "{args}: {err}");
            assert_eq!(err.exit_code(), 1);
        }
    }

    #[test]
    fn help_is_not_an_error() {
        let err = parse("spectrum --help").unwrap_err();
        assert!(matches!(err, CliError::Help(_)));
        assert_eq!(err.exit_code(), 0);
    }

    #[test]
    fn verify_targets() {
        let c = parse("verify --weber --a 5 --b 3 --tol 1e-8").unwrap();
        assert_eq!(c.command, Command::Verify(VerifyTarget::Weber { a: 5.0, b: 3.0 }));
        assert!(parse("verify --a 5 --b 3").is_err());
        assert!(parse("verify --weber --sheet --a 5 --b 3").is_err());
        let c = parse("verify --sheet --n 2 --beta 0.9 --omega 1").unwrap();
        assert_eq!(c.command, Command::Verify(VerifyTarget::Sheet));
    }

    #[test]
    fn log_grid_and_units() {
        let c = parse("spectrum --n 1.5 --beta 0.8 --omega 0.1:10:5 --log --units cgs --format json").unwrap();
        assert!(c.grid().unwrap().log);
        assert_eq!(c.unit_mode, UnitMode::GaussianCgs);
        assert_eq!(c.output_format, OutputFormat::Json);
    }

    #[test]
    fn config_file_with_flag_override() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "n = 1.5\nbeta = 0.8\nomega = \"1:10:10\"\ndim = 3\ndoubled-prefactor = true\nformat = \"json\"")
            .unwrap();
        let path = f.path().to_str().unwrap();
        let c = parse(&format!("spectrum --config {path} --beta 0.9")).unwrap();
        assert_eq!(c.beta, Some(0.9));
        assert_eq!(c.index, Some(IndexSource::Constant(1.5)));
        assert_eq!(c.dimensionality, Dimensionality::ThreeD);
        assert!(c.doubled_prefactor);
        assert_eq!(c.output_format, OutputFormat::Json);

        // a flag-supplied table replaces a config-supplied constant index
        let c = parse(&format!("spectrum --config {path} --dispersion-file d.csv")).unwrap();
        assert_eq!(c.index, Some(IndexSource::File("d.csv".into())));
    }

    #[test]
    fn config_file_rejects_unknown_keys() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "refractive_index = 1.5").unwrap();
        let err = parse(&format!("threshold --config {} --n 1.5 --beta 0.8", f.path().display())).unwrap_err();
        assert!(err.to_string().contains("--config"), "{err}");
        assert_eq!(err.exit_code(), 1);
        let err = parse("threshold --config /nonexistent/cfg.toml --n 1.5 --beta 0.8").unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }
}
