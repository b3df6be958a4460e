//! Spatial propagator kernels.
//!
//! Going from bulk to sheet geometry swaps exactly one ingredient of the
//! spectral formula: the spherical kernel `sin(nωR/c)/R` becomes the
//! cylindrical kernel `J₀(nωR/c)`. The [`Propagator`] trait ties each kernel
//! to its geometry at the type level, so the sheet pipeline cannot be handed
//! a bulk kernel and vice versa.

use crate::specfun::bessel_j0;
use crate::units::UnitSystem;

use super::Dimensionality;

pub trait Geometry {
    const DIMENSIONALITY: Dimensionality;
}

/// A charge moving parallel to a two-dimensional sheet.
#[derive(Debug, Clone, Copy)]
pub struct Planar;

/// A charge moving through a homogeneous three-dimensional medium.
#[derive(Debug, Clone, Copy)]
pub struct Bulk;

impl Geometry for Planar {
    const DIMENSIONALITY: Dimensionality = Dimensionality::TwoD;
}

impl Geometry for Bulk {
    const DIMENSIONALITY: Dimensionality = Dimensionality::ThreeD;
}

pub trait Propagator {
    type Geometry: Geometry;

    /// Kernel value for index `n`, angular frequency `omega` and separation `distance`.
    fn eval(&self, n: f64, omega: f64, distance: f64, units: &UnitSystem) -> f64;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SheetKernel;

#[derive(Debug, Clone, Copy, Default)]
pub struct BulkKernel;

impl Propagator for SheetKernel {
    type Geometry = Planar;

    fn eval(&self, n: f64, omega: f64, distance: f64, units: &UnitSystem) -> f64 {
        kernel_2d(n, omega, distance, units)
    }
}

impl Propagator for BulkKernel {
    type Geometry = Bulk;

    fn eval(&self, n: f64, omega: f64, distance: f64, units: &UnitSystem) -> f64 {
        kernel_3d(n, omega, distance, units)
    }
}

/// `J₀(nωR/c)`. Returns NaN for a non-finite argument.
pub fn kernel_2d(n: f64, omega: f64, distance: f64, units: &UnitSystem) -> f64 {
    let arg = n * omega * distance / units.light_speed();
    bessel_j0(arg).map_or(f64::NAN, |r| r.value)
}

/// `sin(nωR/c)/R`, with the limit `nω/c` at `R = 0`.
pub fn kernel_3d(n: f64, omega: f64, distance: f64, units: &UnitSystem) -> f64 {
    let k = n * omega / units.light_speed();
    if distance == 0.0 {
        k
    } else {
        (k * distance).sin() / distance
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const RED: UnitSystem = UnitSystem::reduced();

    #[test]
    fn sheet_kernel_examples() {
        assert_eq!(kernel_2d(1.7, 3.0, 0.0, &RED), 1.0);
        assert!((kernel_2d(1.0, 1.0, 1.0, &RED) - 0.765_197_686_6).abs() < 1e-10);
        assert!(kernel_2d(1.0, 1.0, 2.404_825_557_695_773, &RED).abs() < 1e-12);
        assert!(kernel_2d(1.0, 1.0, f64::INFINITY, &RED).is_nan());
    }

    #[test]
    fn bulk_kernel_examples() {
        assert_eq!(kernel_3d(2.0, 3.0, 0.0, &RED), 6.0);
        assert!(kernel_3d(1.0, PI, 1.0, &RED).abs() < 1e-15);
        assert!((kernel_3d(1.5, 2.0, 0.7, &RED) - 2.1f64.sin() / 0.7).abs() < 1e-15);
        assert!((kernel_3d(1.5, 2.0, 0.7, &RED) - 1.233_156_238).abs() < 1e-9);
        // small-R behaviour approaches the limit
        assert!((kernel_3d(2.0, 3.0, 1e-9, &RED) - 6.0).abs() < 1e-12);
    }

    #[test]
    fn light_speed_enters_the_argument() {
        let cgs = UnitSystem::gaussian_cgs();
        let c = cgs.light_speed();
        assert_eq!(kernel_2d(1.0, c, 1.0, &cgs), kernel_2d(1.0, 1.0, 1.0, &RED));
    }

    #[test]
    fn geometry_tags() {
        assert_eq!(<SheetKernel as Propagator>::Geometry::DIMENSIONALITY, Dimensionality::TwoD);
        assert_eq!(<BulkKernel as Propagator>::Geometry::DIMENSIONALITY, Dimensionality::ThreeD);
    }
}
