//! Čerenkov spectral power for sheet (2D) and bulk (3D) geometries.
//!
//! All power densities are time-stationary, energy per unit time per unit
//! angular frequency, in the active [`UnitSystem`].

mod kernel;
mod power;
mod scan;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dispersion::DispersionError;
use crate::medium::ModelError;
use crate::quadrature::QuadError;
use crate::units::UnitMode;

pub use kernel::{kernel_2d, kernel_3d, Bulk, BulkKernel, Geometry, Planar, Propagator, SheetKernel};
pub use power::{
    bulk_power_numeric_with, cone_angle_3d, photon_rate, sheet_power_numeric_with, spectral_power_2d_closed,
    spectral_power_2d_numeric, spectral_power_3d, spectral_power_3d_numeric, ConeAngle,
};
pub use scan::scan_spectrum;

#[derive(Debug, Error)]
pub enum RadiationError {
    #[error("no Cerenkov cone: n*beta = {parameter} <= 1 (below threshold)")]
    NoCone { parameter: f64 },
    #[error("angular frequency must be finite and > 0, got {0}")]
    InvalidFrequency(f64),
    #[error("tolerance must be finite and > 0, got {0}")]
    InvalidTolerance(f64),
    #[error("dispersion model failed at omega = {omega}: {source}")]
    Dispersion {
        omega: f64,
        #[source]
        source: DispersionError,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dimensionality {
    #[serde(rename = "2d")]
    TwoD,
    #[serde(rename = "3d")]
    ThreeD,
}

impl Dimensionality {
    pub fn as_str(self) -> &'static str {
        match self {
            Dimensionality::TwoD => "2D",
            Dimensionality::ThreeD => "3D",
        }
    }
}

/// One sample of a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralPoint {
    pub omega: f64,
    pub power_density: f64,
    /// `power_density / (ħω)`.
    pub photon_rate_density: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub dimensionality: Dimensionality,
    pub points: Vec<SpectralPoint>,
    pub medium_desc: String,
    pub particle_desc: String,
    pub unit_mode: UnitMode,
    /// Whether sheet powers carry the doubled prefactor.
    pub doubled_prefactor: bool,
    pub convention: String,
}
