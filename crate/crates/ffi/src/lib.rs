//! C ABI for the `cerenkov` library.
//!
//! Conventions:
//!
//! * Every fallible function returns a [`CrkStatus`] and writes its result
//!   through an out-pointer. On failure the out-pointer is left untouched and
//!   [`crk_last_error`] describes what went wrong on the calling thread.
//! * Media, particles, dispersion models and spectra are opaque handles
//!   created by `crk_*_new`-style functions and released with the matching
//!   `crk_*_free`. Freeing `NULL` is a no-op.
//! * Unit systems and dimensionalities are passed as the `CRK_UNITS_*` and
//!   `CRK_DIM_*` integer constants.
//! * Panics never cross the boundary; they surface as [`CrkStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cerenkov::dispersion::DispersionError;
use cerenkov::quadrature::{weber_closed_form, weber_integral, QuadError};
use cerenkov::radiation::{
    cone_angle_3d, photon_rate, scan_spectrum, spectral_power_2d_closed, spectral_power_2d_numeric, spectral_power_3d,
    spectral_power_3d_numeric, Dimensionality, RadiationError, SpectralPoint,
};
use cerenkov::specfun::{bessel_j0, bessel_jn};
use cerenkov::{
    cherenkov_parameter, DispersionModel, FrequencyGrid, Medium, ModelError, Particle, ThresholdStatus, UnitSystem,
};

pub const CRK_UNITS_REDUCED: c_int = 0;
pub const CRK_UNITS_GAUSSIAN_CGS: c_int = 1;

pub const CRK_DIM_2D: c_int = 2;
pub const CRK_DIM_3D: c_int = 3;

pub const CRK_THRESHOLD_BELOW: c_int = -1;
pub const CRK_THRESHOLD_AT: c_int = 0;
pub const CRK_THRESHOLD_ABOVE: c_int = 1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// No cone (or other quantity) exists at or below threshold.
    BelowThreshold = 3,
    /// The Weber integral diverges (`a = b`).
    Divergent = 4,
    /// The dispersion model cannot be evaluated at the requested frequency.
    Dispersion = 5,
    Io = 6,
    Parse = 7,
    /// The integrator ran out of budget.
    NotConverged = 8,
    Panic = 9,
}

/// Refractive index and permeability of a medium.
pub struct CrkMedium(Medium);

/// Charge and speed of the radiating particle.
pub struct CrkParticle(Particle);

/// A refractive-index model `n(omega)`.
pub struct CrkDispersion(DispersionModel);

/// A computed spectrum.
pub struct CrkSpectrum(Vec<SpectralPoint>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: CrkStatus,
    message: String,
}

impl Failure {
    fn new(status: CrkStatus, message: impl Into<String>) -> Self {
        Self { status, message: message.into() }
    }
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        Failure::new(CrkStatus::InvalidArgument, e.to_string())
    }
}

impl From<DispersionError> for Failure {
    fn from(e: DispersionError) -> Self {
        let status = match e {
            DispersionError::Io(_) => CrkStatus::Io,
            DispersionError::Parse { .. } => CrkStatus::Parse,
            DispersionError::InvalidModel(_) | DispersionError::Model(_) | DispersionError::RefineTolerance(_) => {
                CrkStatus::InvalidArgument
            }
            _ => CrkStatus::Dispersion,
        };
        Failure::new(status, e.to_string())
    }
}

impl From<QuadError> for Failure {
    fn from(e: QuadError) -> Self {
        let status = match e {
            QuadError::Divergent { .. } => CrkStatus::Divergent,
            QuadError::BudgetExhausted { .. } => CrkStatus::NotConverged,
            _ => CrkStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

impl From<RadiationError> for Failure {
    fn from(e: RadiationError) -> Self {
        let status = match &e {
            RadiationError::NoCone { .. } => CrkStatus::BelowThreshold,
            RadiationError::Dispersion { .. } => CrkStatus::Dispersion,
            RadiationError::Quadrature(q) => return Failure { message: e.to_string(), ..Failure::from(q.clone()) },
            _ => CrkStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CrkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            CrkStatus::Ok
        }
        Ok(Err(f)) => {
            set_last_error(f.message);
            f.status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("internal panic: {msg}"));
            CrkStatus::Panic
        }
    }
}

fn null(name: &str) -> Failure {
    Failure::new(CrkStatus::NullPointer, format!("{name} is NULL"))
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(name))
}

unsafe fn write<T>(out: *mut T, name: &str, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(name));
    }
    out.write(value);
    Ok(())
}

fn units(code: c_int) -> Result<UnitSystem, Failure> {
    match code {
        CRK_UNITS_REDUCED => Ok(UnitSystem::reduced()),
        CRK_UNITS_GAUSSIAN_CGS => Ok(UnitSystem::gaussian_cgs()),
        other => Err(Failure::new(CrkStatus::InvalidArgument, format!("unknown unit system {other}"))),
    }
}

fn dimensionality(code: c_int) -> Result<Dimensionality, Failure> {
    match code {
        CRK_DIM_2D => Ok(Dimensionality::TwoD),
        CRK_DIM_3D => Ok(Dimensionality::ThreeD),
        other => Err(Failure::new(CrkStatus::InvalidArgument, format!("dimensionality must be 2 or 3, got {other}"))),
    }
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message for the most recent failure on this thread, or `NULL` if the last
/// call succeeded. Valid until the next `crk_*` call on the same thread.
#[no_mangle]
pub extern "C" fn crk_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn crk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_medium_new(
    refractive_index: f64,
    permeability: f64,
    out: *mut *mut CrkMedium,
) -> CrkStatus {
    guard(|| {
        let m = Medium::new(refractive_index, permeability)?;
        write(out, "out", boxed(CrkMedium(m)))
    })
}

/// # Safety
/// `medium` must be `NULL` or a handle from [`crk_medium_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn crk_medium_free(medium: *mut CrkMedium) {
    free(medium)
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_particle_new(charge_multiple: f64, beta: f64, out: *mut *mut CrkParticle) -> CrkStatus {
    guard(|| {
        let p = Particle::new(charge_multiple, beta)?;
        write(out, "out", boxed(CrkParticle(p)))
    })
}

/// # Safety
/// `particle` must be `NULL` or a handle from [`crk_particle_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn crk_particle_free(particle: *mut CrkParticle) {
    free(particle)
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_dispersion_constant(refractive_index: f64, out: *mut *mut CrkDispersion) -> CrkStatus {
    guard(|| write(out, "out", boxed(CrkDispersion(DispersionModel::constant(refractive_index)?))))
}

/// Single-resonance model `n² = 1 + strength·ω₀²/(ω₀² − ω²)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_dispersion_single_resonance(
    resonance_omega: f64,
    strength: f64,
    out: *mut *mut CrkDispersion,
) -> CrkStatus {
    guard(|| write(out, "out", boxed(CrkDispersion(DispersionModel::single_resonance(resonance_omega, strength)?))))
}

/// Linearly interpolated table of `len` rows, `omega` strictly increasing.
///
/// # Safety
/// `omega` and `n` must each point to `len` readable doubles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_dispersion_tabulated(
    omega: *const f64,
    n: *const f64,
    len: usize,
    out: *mut *mut CrkDispersion,
) -> CrkStatus {
    guard(|| {
        if omega.is_null() {
            return Err(null("omega"));
        }
        if n.is_null() {
            return Err(null("n"));
        }
        let (omega, n) = (std::slice::from_raw_parts(omega, len), std::slice::from_raw_parts(n, len));
        let rows: Vec<(f64, f64)> = omega.iter().copied().zip(n.iter().copied()).collect();
        write(out, "out", boxed(CrkDispersion(DispersionModel::tabulated(&rows)?)))
    })
}

/// Loads an `omega,n` CSV table.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_dispersion_from_csv(path: *const c_char, out: *mut *mut CrkDispersion) -> CrkStatus {
    guard(|| {
        if path.is_null() {
            return Err(null("path"));
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| Failure::new(CrkStatus::InvalidArgument, "path is not valid UTF-8"))?;
        write(out, "out", boxed(CrkDispersion(DispersionModel::from_csv_path(path)?)))
    })
}

/// # Safety
/// `model` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_dispersion_n_of_omega(
    model: *const CrkDispersion,
    omega: f64,
    out: *mut f64,
) -> CrkStatus {
    guard(|| {
        let model = deref(model, "model")?;
        write(out, "out", model.0.n_of_omega(omega)?)
    })
}

/// # Safety
/// `model` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crk_dispersion_free(model: *mut CrkDispersion) {
    free(model)
}

/// Writes `n·β` to `out`.
///
/// # Safety
/// Handles must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_cherenkov_parameter(
    medium: *const CrkMedium,
    particle: *const CrkParticle,
    out: *mut f64,
) -> CrkStatus {
    guard(|| {
        let (m, p) = (deref(medium, "medium")?, deref(particle, "particle")?);
        write(out, "out", cherenkov_parameter(&m.0, &p.0))
    })
}

/// Writes one of the `CRK_THRESHOLD_*` constants to `out`.
///
/// # Safety
/// Handles must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_threshold_status(
    medium: *const CrkMedium,
    particle: *const CrkParticle,
    out: *mut c_int,
) -> CrkStatus {
    guard(|| {
        let (m, p) = (deref(medium, "medium")?, deref(particle, "particle")?);
        let code = match ThresholdStatus::of(&m.0, &p.0) {
            ThresholdStatus::Below => CRK_THRESHOLD_BELOW,
            ThresholdStatus::AtThreshold => CRK_THRESHOLD_AT,
            ThresholdStatus::Above => CRK_THRESHOLD_ABOVE,
        };
        write(out, "out", code)
    })
}

/// Closed-form sheet power; `doubled_prefactor` selects the doubled normalisation.
///
/// # Safety
/// Handles must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_power_2d_closed(
    medium: *const CrkMedium,
    particle: *const CrkParticle,
    doubled_prefactor: bool,
    unit_system: c_int,
    out: *mut f64,
) -> CrkStatus {
    guard(|| {
        let (m, p) = (deref(medium, "medium")?, deref(particle, "particle")?);
        let u = units(unit_system)?;
        write(out, "out", spectral_power_2d_closed(&m.0, &p.0, doubled_prefactor, &u))
    })
}

/// Sheet power at `omega` by quadrature, to absolute tolerance `tol`.
///
/// # Safety
/// Handles must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_power_2d_numeric(
    medium: *const CrkMedium,
    particle: *const CrkParticle,
    omega: f64,
    tol: f64,
    unit_system: c_int,
    out: *mut f64,
) -> CrkStatus {
    guard(|| {
        let (m, p) = (deref(medium, "medium")?, deref(particle, "particle")?);
        let u = units(unit_system)?;
        write(out, "out", spectral_power_2d_numeric(&m.0, &p.0, omega, tol, &u)?)
    })
}

/// Closed-form bulk power at `omega`.
///
/// # Safety
/// Handles must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_power_3d(
    medium: *const CrkMedium,
    particle: *const CrkParticle,
    omega: f64,
    unit_system: c_int,
    out: *mut f64,
) -> CrkStatus {
    guard(|| {
        let (m, p) = (deref(medium, "medium")?, deref(particle, "particle")?);
        let u = units(unit_system)?;
        write(out, "out", spectral_power_3d(&m.0, &p.0, omega, &u)?)
    })
}

/// Bulk power at `omega` by quadrature, to absolute tolerance `tol`.
///
/// # Safety
/// Handles must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_power_3d_numeric(
    medium: *const CrkMedium,
    particle: *const CrkParticle,
    omega: f64,
    tol: f64,
    unit_system: c_int,
    out: *mut f64,
) -> CrkStatus {
    guard(|| {
        let (m, p) = (deref(medium, "medium")?, deref(particle, "particle")?);
        let u = units(unit_system)?;
        write(out, "out", spectral_power_3d_numeric(&m.0, &p.0, omega, tol, &u)?)
    })
}

/// Cone half-angle in radians; [`CrkStatus::BelowThreshold`] when `nβ ≤ 1`.
///
/// # Safety
/// Handles must be live; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_cone_angle(
    medium: *const CrkMedium,
    particle: *const CrkParticle,
    out_theta: *mut f64,
) -> CrkStatus {
    guard(|| {
        let (m, p) = (deref(medium, "medium")?, deref(particle, "particle")?);
        write(out_theta, "out_theta", cone_angle_3d(&m.0, &p.0)?.theta())
    })
}

/// `power_density / (ħ·omega)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_photon_rate(
    power_density: f64,
    omega: f64,
    unit_system: c_int,
    out: *mut f64,
) -> CrkStatus {
    guard(|| {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Failure::new(CrkStatus::InvalidArgument, format!("omega must be > 0, got {omega}")));
        }
        let u = units(unit_system)?;
        write(out, "out", photon_rate(power_density, omega, &u))
    })
}

/// `J₀(x)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_bessel_j0(x: f64, out: *mut f64) -> CrkStatus {
    guard(|| {
        let r = bessel_j0(x).map_err(|e| Failure::new(CrkStatus::InvalidArgument, e.to_string()))?;
        write(out, "out", r.value)
    })
}

/// `J_n(x)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_bessel_jn(order: u32, x: f64, out: *mut f64) -> CrkStatus {
    guard(|| {
        let v = bessel_jn(order, x).map_err(|e| Failure::new(CrkStatus::InvalidArgument, e.to_string()))?;
        write(out, "out", v)
    })
}

/// Numerical `∫₀^∞ J₀(aτ)cos(bτ)dτ`. `out_error` may be `NULL`. Returns
/// [`CrkStatus::NotConverged`] (with the best value still written) when
/// the tolerance could not be met.
///
/// # Safety
/// `out_value` must be valid for writes; `out_error` must be `NULL` or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_weber_integral(
    a: f64,
    b: f64,
    tol: f64,
    out_value: *mut f64,
    out_error: *mut f64,
) -> CrkStatus {
    guard(|| {
        if out_value.is_null() {
            return Err(null("out_value"));
        }
        let r = weber_integral(a, b, tol)?;
        out_value.write(r.value);
        if !out_error.is_null() {
            out_error.write(r.abs_error_estimate);
        }
        if r.converged {
            Ok(())
        } else {
            Err(Failure::new(
                CrkStatus::NotConverged,
                format!("estimated error {:e} exceeds {tol:e}", r.abs_error_estimate),
            ))
        }
    })
}

/// `1/√(a² − b²)` for `b < a`, else `0`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_weber_closed_form(a: f64, b: f64, out: *mut f64) -> CrkStatus {
    guard(|| write(out, "out", weber_closed_form(a, b)?))
}

/// Closed-form spectrum on the given increasing positive frequencies.
///
/// # Safety
/// Handles must be live; `omega` must point to `len` readable doubles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_scan_spectrum(
    dim: c_int,
    model: *const CrkDispersion,
    permeability: f64,
    particle: *const CrkParticle,
    omega: *const f64,
    len: usize,
    unit_system: c_int,
    doubled_prefactor: bool,
    out: *mut *mut CrkSpectrum,
) -> CrkStatus {
    guard(|| {
        let (model, p) = (deref(model, "model")?, deref(particle, "particle")?);
        if omega.is_null() {
            return Err(null("omega"));
        }
        let grid = FrequencyGrid::new(std::slice::from_raw_parts(omega, len).to_vec())
            .map_err(|e| Failure::new(CrkStatus::InvalidArgument, e.to_string()))?;
        let result = scan_spectrum(
            dimensionality(dim)?,
            &model.0,
            permeability,
            &p.0,
            &grid,
            &units(unit_system)?,
            doubled_prefactor,
        )?;
        write(out, "out", boxed(CrkSpectrum(result.points)))
    })
}

/// Number of points in a spectrum; `0` for `NULL`.
///
/// # Safety
/// `spectrum` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crk_spectrum_len(spectrum: *const CrkSpectrum) -> usize {
    spectrum.as_ref().map_or(0, |s| s.0.len())
}

/// Copies point `index`. Any of the out-pointers may be `NULL`.
///
/// # Safety
/// `spectrum` must be a live handle; non-NULL out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn crk_spectrum_point(
    spectrum: *const CrkSpectrum,
    index: usize,
    out_omega: *mut f64,
    out_power: *mut f64,
    out_photon_rate: *mut f64,
) -> CrkStatus {
    guard(|| {
        let s = deref(spectrum, "spectrum")?;
        let p = s.0.get(index).ok_or_else(|| {
            Failure::new(CrkStatus::InvalidArgument, format!("index {index} out of range for {} points", s.0.len()))
        })?;
        for (out, v) in [(out_omega, p.omega), (out_power, p.power_density), (out_photon_rate, p.photon_rate_density)] {
            if !out.is_null() {
                out.write(v);
            }
        }
        Ok(())
    })
}

/// # Safety
/// `spectrum` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crk_spectrum_free(spectrum: *mut CrkSpectrum) {
    free(spectrum)
}
