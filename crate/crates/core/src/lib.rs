//! Spectral power of Vavilov-Čerenkov radiation emitted by a point charge
//! moving parallel to a two-dimensional dielectric sheet, together with the
//! three-dimensional bulk analogue.
//!
//! The crate is layered bottom-up:
//!
//! * [`units`], [`medium`], [`dispersion`], [`grid`]: domain types shared by
//!   everything else (media, particles, refractive-index models, frequency
//!   grids, unit conventions).
//! * [`specfun`]: Bessel functions of the first kind and the Jacobi-Anger
//!   angular expansions.
//! * [`quadrature`]: adaptive Gauss-Kronrod integration, sequence
//!   acceleration and the semi-infinite oscillatory integrator used to
//!   evaluate `∫₀^∞ J₀(aτ) cos(bτ) dτ` by brute force.
//! * [`radiation`]: propagator kernels, sheet and bulk spectral power,
//!   thresholds, the cone angle, photon rates and spectrum scans.
//! * [`cli`]: the `cerenkov` command-line frontend (argument parsing, config
//!   files, CSV/JSON/SVG output).

pub mod cli;
pub mod dispersion;
pub mod grid;
pub mod medium;
pub mod quadrature;
pub mod radiation;
pub mod specfun;
pub mod units;

pub use dispersion::{DispersionError, DispersionModel};
pub use grid::FrequencyGrid;
pub use medium::{cherenkov_parameter, is_superluminal, Medium, ModelError, Particle, ThresholdStatus};
pub use units::{UnitMode, UnitSystem};
