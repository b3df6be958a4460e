//! Refractive-index models `n(ω)` and the search for radiating frequency bands.
//!
//! Three model shapes are supported: a constant index, a single undamped
//! Lorentz resonance `n²(ω) = 1 + s·ω₀²/(ω₀² − ω²)` (which drops below 1
//! above the resonance, so the radiation switches off at short wavelengths),
//! and a table interpolated piecewise-linearly.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::FrequencyGrid;
use crate::medium::{ModelError, Particle};

/// Default half-width of the excluded band around a resonance, relative to `ω₀`.
pub const DEFAULT_GUARD_BAND: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum DispersionError {
    #[error("invalid dispersion model: {0}")]
    InvalidModel(String),
    #[error("angular frequency must be finite and >= 0, got {0}")]
    InvalidFrequency(f64),
    #[error("omega = {omega} is outside the tabulated range [{min}, {max}]")]
    OutOfRange { omega: f64, min: f64, max: f64 },
    #[error("omega = {omega} lies inside the guard band of the resonance at {resonance_omega}")]
    Singularity { omega: f64, resonance_omega: f64 },
    #[error("n^2 = {n_squared} <= 0 at omega = {omega}: no propagating wave")]
    NonPropagating { omega: f64, n_squared: f64 },
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error("refine tolerance must be > 0, got {0}")]
    RefineTolerance(f64),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// The variants a [`DispersionModel`] can take, exposed read-only through
/// [`DispersionModel::kind`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DispersionKind {
    Constant { n: f64 },
    SingleResonance { resonance_omega: f64, strength: f64, guard_band: f64 },
    Tabulated { omega: Vec<f64>, n: Vec<f64> },
}

/// A validated refractive-index model.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct DispersionModel {
    kind: DispersionKind,
}

impl DispersionModel {
    pub fn constant(n: f64) -> Result<Self, DispersionError> {
        if !(n.is_finite() && n > 0.0) {
            return Err(DispersionError::InvalidModel(format!("constant index must be > 0, got {n}")));
        }
        Ok(Self { kind: DispersionKind::Constant { n } })
    }

    pub fn single_resonance(resonance_omega: f64, strength: f64) -> Result<Self, DispersionError> {
        Self::single_resonance_with_guard(resonance_omega, strength, DEFAULT_GUARD_BAND)
    }

    pub fn single_resonance_with_guard(
        resonance_omega: f64,
        strength: f64,
        guard_band: f64,
    ) -> Result<Self, DispersionError> {
        if !(resonance_omega.is_finite() && resonance_omega > 0.0) {
            return Err(DispersionError::InvalidModel(format!(
                "resonance frequency must be > 0, got {resonance_omega}"
            )));
        }
        if !(strength.is_finite() && strength > 0.0) {
            return Err(DispersionError::InvalidModel(format!("resonance strength must be > 0, got {strength}")));
        }
        if !(guard_band.is_finite() && guard_band > 0.0) {
            return Err(DispersionError::InvalidModel(format!("guard band must be > 0, got {guard_band}")));
        }
        Ok(Self { kind: DispersionKind::SingleResonance { resonance_omega, strength, guard_band } })
    }

    /// Builds a table from `(omega, n)` rows; omegas must be strictly
    /// increasing and every index positive.
    pub fn tabulated(rows: &[(f64, f64)]) -> Result<Self, DispersionError> {
        if rows.len() < 2 {
            return Err(DispersionError::InvalidModel("a dispersion table needs at least two rows".into()));
        }
        for (i, &(omega, n)) in rows.iter().enumerate() {
            if !(omega.is_finite() && omega >= 0.0) {
                return Err(DispersionError::InvalidModel(format!("row {i}: omega must be finite and >= 0")));
            }
            if !(n.is_finite() && n > 0.0) {
                return Err(DispersionError::InvalidModel(format!("row {i}: n must be finite and > 0")));
            }
            if i > 0 && omega <= rows[i - 1].0 {
                return Err(DispersionError::InvalidModel(format!("row {i}: omegas must be strictly increasing")));
            }
        }
        let (omega, n) = rows.iter().copied().unzip();
        Ok(Self { kind: DispersionKind::Tabulated { omega, n } })
    }

    /// Reads a two-column `omega,n` CSV with a mandatory header row.
    pub fn from_csv_reader<R: Read>(reader: R) -> Result<Self, DispersionError> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
        let header = rdr.headers().map_err(|e| csv_error(e, 1))?.clone();
        if header.len() != 2 || &header[0] != "omega" || &header[1] != "n" {
            return Err(DispersionError::Parse {
                line: 1,
                message: format!("expected header `omega,n`, found `{}`", header.iter().collect::<Vec<_>>().join(",")),
            });
        }

        let mut rows: Vec<(f64, f64)> = Vec::new();
        for record in rdr.records() {
            let record = record.map_err(|e| csv_error(e, 0))?;
            let line = record.position().map_or(0, |p| p.line());
            if record.len() != 2 {
                return Err(DispersionError::Parse {
                    line,
                    message: format!("expected 2 fields, found {}", record.len()),
                });
            }
            let field = |i: usize, name: &str| -> Result<f64, DispersionError> {
                record[i].parse::<f64>().map_err(|_| DispersionError::Parse {
                    line,
                    message: format!("cannot parse {name} value `{}`", &record[i]),
                })
            };
            let omega = field(0, "omega")?;
            let n = field(1, "n")?;
            if !(omega.is_finite() && omega >= 0.0) {
                return Err(DispersionError::Parse {
                    line,
                    message: format!("omega must be finite and >= 0, got {omega}"),
                });
            }
            if !(n.is_finite() && n > 0.0) {
                return Err(DispersionError::Parse { line, message: format!("n must be finite and > 0, got {n}") });
            }
            if let Some(&(prev, _)) = rows.last() {
                if omega <= prev {
                    return Err(DispersionError::Parse {
                        line,
                        message: format!("omega {omega} does not increase (previous row has {prev})"),
                    });
                }
            }
            rows.push((omega, n));
        }
        Self::tabulated(&rows)
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self, DispersionError> {
        let file = std::fs::File::open(path)?;
        Self::from_csv_reader(std::io::BufReader::new(file))
    }

    pub fn kind(&self) -> &DispersionKind {
        &self.kind
    }

    /// Human-readable one-line description, used in output metadata.
    pub fn describe(&self) -> String {
        match &self.kind {
            DispersionKind::Constant { n } => format!("constant n={n}"),
            DispersionKind::SingleResonance { resonance_omega, strength, .. } => {
                format!("single resonance omega0={resonance_omega} strength={strength}")
            }
            DispersionKind::Tabulated { omega, .. } => {
                format!("tabulated ({} rows, omega in [{}, {}])", omega.len(), omega[0], omega[omega.len() - 1])
            }
        }
    }

    /// Refractive index at angular frequency `omega`.
    pub fn n_of_omega(&self, omega: f64) -> Result<f64, DispersionError> {
        if !(omega.is_finite() && omega >= 0.0) {
            return Err(DispersionError::InvalidFrequency(omega));
        }
        match &self.kind {
            DispersionKind::Constant { n } => Ok(*n),
            &DispersionKind::SingleResonance { resonance_omega, strength, guard_band } => {
                if (omega - resonance_omega).abs() < guard_band * resonance_omega {
                    return Err(DispersionError::Singularity { omega, resonance_omega });
                }
                let w0sq = resonance_omega * resonance_omega;
                let n_squared = 1.0 + strength * w0sq / (w0sq - omega * omega);
                if n_squared <= 0.0 {
                    return Err(DispersionError::NonPropagating { omega, n_squared });
                }
                Ok(n_squared.sqrt())
            }
            DispersionKind::Tabulated { omega: nodes, n } => {
                let (min, max) = (nodes[0], nodes[nodes.len() - 1]);
                if omega < min || omega > max {
                    return Err(DispersionError::OutOfRange { omega, min, max });
                }
                // first node strictly greater than omega
                let hi = nodes.partition_point(|&x| x <= omega);
                let lo = hi - 1;
                if nodes[lo] == omega {
                    return Ok(n[lo]);
                }
                let t = (omega - nodes[lo]) / (nodes[hi] - nodes[lo]);
                Ok(n[lo] + (n[hi] - n[lo]) * t)
            }
        }
    }
}

fn csv_error(err: csv::Error, fallback_line: u64) -> DispersionError {
    let line = err.position().map_or(fallback_line, |p| p.line());
    DispersionError::Parse { line, message: err.to_string() }
}

/// Maximal frequency intervals inside the grid span where `n(ω)·β > 1`.
///
/// The grid is scanned point by point; every sign change of `n(ω)β − 1`
/// between neighbouring grid points is refined by bisection until the
/// bracket is narrower than `refine_tol` relative to the endpoint. Returned
/// endpoints always lie on the radiating side. Bands narrower than the grid
/// spacing can be missed.
pub fn find_radiating_band(
    model: &DispersionModel,
    particle: &Particle,
    grid: &FrequencyGrid,
    refine_tol: f64,
) -> Result<Vec<(f64, f64)>, DispersionError> {
    if !(refine_tol.is_finite() && refine_tol > 0.0) {
        return Err(DispersionError::RefineTolerance(refine_tol));
    }
    let beta = particle.beta();
    let radiates = |omega: f64| -> Result<bool, DispersionError> { Ok(model.n_of_omega(omega)? * beta > 1.0) };

    let points = grid.points();
    let flags = points.iter().map(|&w| radiates(w)).collect::<Result<Vec<_>, _>>()?;

    let mut bands = Vec::new();
    let mut open: Option<f64> = flags[0].then_some(points[0]);
    for i in 1..points.len() {
        match (flags[i - 1], flags[i]) {
            (false, true) => {
                let (mut fail, mut pass) = (points[i - 1], points[i]);
                while pass - fail > refine_tol * pass {
                    let mid = 0.5 * (fail + pass);
                    if mid <= fail || mid >= pass {
                        break;
                    }
                    if radiates(mid)? {
                        pass = mid;
                    } else {
                        fail = mid;
                    }
                }
                open = Some(pass);
            }
            (true, false) => {
                let (mut pass, mut fail) = (points[i - 1], points[i]);
                while fail - pass > refine_tol * pass {
                    let mid = 0.5 * (pass + fail);
                    if mid <= pass || mid >= fail {
                        break;
                    }
                    if radiates(mid)? {
                        pass = mid;
                    } else {
                        fail = mid;
                    }
                }
                if let Some(start) = open.take() {
                    bands.push((start, pass));
                }
            }
            _ => {}
        }
    }
    if let Some(start) = open {
        bands.push((start, points[points.len() - 1]));
    }
    Ok(bands)
}
