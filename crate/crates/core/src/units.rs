//! Unit conventions.
//!
//! Every formula in the crate is written once, symbolically, in terms of the
//! elementary charge `e`, the vacuum light speed `c` and the reduced Planck
//! constant `ħ` taken from a [`UnitSystem`]. Switching the system therefore
//! rescales each power output by the same positive constant.

use serde::{Deserialize, Serialize};

/// Elementary charge in statcoulomb.
pub const ELEMENTARY_CHARGE_ESU: f64 = 4.803_204_712_570_263e-10;
/// Speed of light in cm/s.
pub const LIGHT_SPEED_CM_PER_S: f64 = 2.997_924_58e10;
/// Reduced Planck constant in erg·s.
pub const HBAR_ERG_S: f64 = 1.054_571_817e-27;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum UnitMode {
    /// `e = c = ħ = 1`; all outputs are dimensionless.
    #[default]
    Reduced,
    /// Gaussian CGS: charge in esu, lengths in cm, energies in erg.
    GaussianCgs,
}

impl UnitMode {
    pub fn as_str(self) -> &'static str {
        match self {
            UnitMode::Reduced => "reduced",
            UnitMode::GaussianCgs => "gaussian-cgs",
        }
    }
}

impl std::str::FromStr for UnitMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "reduced" => Ok(UnitMode::Reduced),
            "gaussian-cgs" | "cgs" => Ok(UnitMode::GaussianCgs),
            other => Err(format!("unknown unit mode `{other}` (expected `reduced` or `gaussian-cgs`)")),
        }
    }
}

/// The constants `e`, `c`, `ħ` of the active unit convention.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    mode: UnitMode,
    elementary_charge: f64,
    light_speed: f64,
    hbar: f64,
}

impl UnitSystem {
    pub const fn reduced() -> Self {
        Self { mode: UnitMode::Reduced, elementary_charge: 1.0, light_speed: 1.0, hbar: 1.0 }
    }

    pub const fn gaussian_cgs() -> Self {
        Self {
            mode: UnitMode::GaussianCgs,
            elementary_charge: ELEMENTARY_CHARGE_ESU,
            light_speed: LIGHT_SPEED_CM_PER_S,
            hbar: HBAR_ERG_S,
        }
    }

    pub const fn from_mode(mode: UnitMode) -> Self {
        match mode {
            UnitMode::Reduced => Self::reduced(),
            UnitMode::GaussianCgs => Self::gaussian_cgs(),
        }
    }

    pub fn mode(&self) -> UnitMode {
        self.mode
    }

    /// Elementary charge (1 in reduced units, esu in CGS).
    pub fn elementary_charge(&self) -> f64 {
        self.elementary_charge
    }

    pub fn light_speed(&self) -> f64 {
        self.light_speed
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Short note describing what a spectral power value means in this system.
    pub fn power_convention(&self) -> &'static str {
        match self.mode {
            UnitMode::Reduced => "dimensionless (e = c = hbar = 1)",
            UnitMode::GaussianCgs => {
                "Gaussian CGS, energy per unit angular frequency; absolute magnitude is convention-dependent"
            }
        }
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self::reduced()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_constants_are_exactly_one() {
        let u = UnitSystem::reduced();
        assert_eq!(u.elementary_charge(), 1.0);
        assert_eq!(u.light_speed(), 1.0);
        assert_eq!(u.hbar(), 1.0);
        assert_eq!(UnitSystem::default(), u);
    }

    #[test]
    fn cgs_constants_positive() {
        let u = UnitSystem::gaussian_cgs();
        assert!(u.elementary_charge() > 0.0 && u.light_speed() > 0.0 && u.hbar() > 0.0);
        assert_eq!(u.mode(), UnitMode::GaussianCgs);
    }

    #[test]
    fn mode_parses() {
        assert_eq!("reduced".parse::<UnitMode>().unwrap(), UnitMode::Reduced);
        assert_eq!("gaussian-cgs".parse::<UnitMode>().unwrap(), UnitMode::GaussianCgs);
        assert!("si".parse::<UnitMode>().is_err());
    }
}
