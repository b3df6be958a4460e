//! Media, particles and the Čerenkov threshold.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dispersion::{DispersionError, DispersionModel};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("refractive index must be finite and > 0, got {0}")]
    RefractiveIndex(f64),
    #[error("permeability must be finite and > 0, got {0}")]
    Permeability(f64),
    #[error("beta must lie in (0, 1), got {0}")]
    Beta(f64),
    #[error("charge multiple must be finite and non-zero, got {0}")]
    Charge(f64),
}

/// A non-absorbing dielectric described by its refractive index `n` and
/// relative permeability `μ`.
///
/// The permittivity is not stored; it follows from `n² = εμ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Medium {
    refractive_index: f64,
    permeability: f64,
}

impl Medium {
    pub fn new(refractive_index: f64, permeability: f64) -> Result<Self, ModelError> {
        if !(refractive_index.is_finite() && refractive_index > 0.0) {
            return Err(ModelError::RefractiveIndex(refractive_index));
        }
        if !(permeability.is_finite() && permeability > 0.0) {
            return Err(ModelError::Permeability(permeability));
        }
        Ok(Self { refractive_index, permeability })
    }

    /// Non-magnetic medium (`μ = 1`).
    pub fn with_index(refractive_index: f64) -> Result<Self, ModelError> {
        Self::new(refractive_index, 1.0)
    }

    /// The medium seen at angular frequency `omega`; its index is exactly `n(omega)`.
    pub fn from_dispersion(model: &DispersionModel, omega: f64, permeability: f64) -> Result<Self, DispersionError> {
        let n = model.n_of_omega(omega)?;
        Self::new(n, permeability).map_err(DispersionError::from)
    }

    pub fn refractive_index(&self) -> f64 {
        self.refractive_index
    }

    pub fn permeability(&self) -> f64 {
        self.permeability
    }

    /// `ε = n²/μ`, derived on demand.
    pub fn permittivity(&self) -> f64 {
        self.refractive_index * self.refractive_index / self.permeability
    }
}

/// A point charge in uniform motion. Only the charge and the reduced speed
/// `β = v/c` enter any result; there is deliberately no mass.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Particle {
    charge_multiple: f64,
    beta: f64,
}

impl Particle {
    pub fn new(charge_multiple: f64, beta: f64) -> Result<Self, ModelError> {
        if !(charge_multiple.is_finite() && charge_multiple != 0.0) {
            return Err(ModelError::Charge(charge_multiple));
        }
        if !(beta.is_finite() && beta > 0.0 && beta < 1.0) {
            return Err(ModelError::Beta(beta));
        }
        Ok(Self { charge_multiple, beta })
    }

    /// Singly charged particle.
    pub fn with_beta(beta: f64) -> Result<Self, ModelError> {
        Self::new(1.0, beta)
    }

    pub fn charge_multiple(&self) -> f64 {
        self.charge_multiple
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Where a (medium, particle) pair sits relative to the threshold `nβ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdStatus {
    Below,
    /// `nβ == 1` exactly. The Weber integral diverges here, so this is kept
    /// out of the radiating set.
    AtThreshold,
    Above,
}

impl ThresholdStatus {
    pub fn classify(parameter: f64) -> Self {
        if parameter > 1.0 {
            ThresholdStatus::Above
        } else if parameter == 1.0 {
            ThresholdStatus::AtThreshold
        } else {
            ThresholdStatus::Below
        }
    }

    pub fn of(medium: &Medium, particle: &Particle) -> Self {
        Self::classify(cherenkov_parameter(medium, particle))
    }
}

/// The product `nβ` that governs the threshold.
pub fn cherenkov_parameter(medium: &Medium, particle: &Particle) -> f64 {
    medium.refractive_index * particle.beta
}

/// `true` iff `nβ > 1`. The boundary `nβ = 1` is not radiating.
pub fn is_superluminal(medium: &Medium, particle: &Particle) -> bool {
    cherenkov_parameter(medium, particle) > 1.0
}
