use rayon::prelude::*;

use super::power::{photon_rate, spectral_power_2d_closed, spectral_power_3d};
use super::{Dimensionality, RadiationError, SpectralPoint, SpectrumResult};
use crate::dispersion::DispersionModel;
use crate::grid::FrequencyGrid;
use crate::medium::{Medium, Particle};
use crate::units::UnitSystem;

/// Evaluates the closed-form spectrum at every grid frequency, with the
/// index taken pointwise from `model`.
///
/// Points are computed in parallel but each is a pure function of its own
/// frequency, so the result is identical to a sequential loop.
pub fn scan_spectrum(
    dimensionality: Dimensionality,
    model: &DispersionModel,
    mu: f64,
    particle: &Particle,
    grid: &FrequencyGrid,
    units: &UnitSystem,
    doubled_prefactor: bool,
) -> Result<SpectrumResult, RadiationError> {
    // reject a bad permeability before touching the grid
    Medium::new(1.0, mu)?;

    let points = grid
        .points()
        .par_iter()
        .map(|&omega| {
            let medium = Medium::from_dispersion(model, omega, mu)
                .map_err(|source| RadiationError::Dispersion { omega, source })?;
            let power = match dimensionality {
                Dimensionality::TwoD => spectral_power_2d_closed(&medium, particle, doubled_prefactor, units),
                Dimensionality::ThreeD => spectral_power_3d(&medium, particle, omega, units)?,
            };
            Ok(SpectralPoint { omega, power_density: power, photon_rate_density: photon_rate(power, omega, units) })
        })
        .collect::<Result<Vec<_>, RadiationError>>()?;

    Ok(SpectrumResult {
        dimensionality,
        points,
        medium_desc: format!("{} mu={mu}", model.describe()),
        particle_desc: format!("charge={} beta={}", particle.charge_multiple(), particle.beta()),
        unit_mode: units.mode(),
        doubled_prefactor,
        convention: units.power_convention().to_string(),
    })
}
