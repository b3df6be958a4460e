//! Bessel functions of the first kind and the Jacobi-Anger expansions.
//!
//! `J₀` is evaluated by its ascending power series below [`J0_CROSSOVER`]
//! (summed in double-double so that cancellation between large terms does
//! not eat the result) and by the Hankel asymptotic expansion above it.
//! Integer orders use the ascending series for small arguments and Miller's
//! backward recurrence, normalised by `J₀ + 2ΣJ₂ₖ = 1`, otherwise.

mod bessel;
mod ddouble;
mod jacobi_anger;

use serde::Serialize;
use thiserror::Error;

pub use bessel::{bessel_j0, bessel_jn, bessel_jn_report, bessel_jn_sequence, j0_asymptotic, j0_power_series};
pub use jacobi_anger::{jacobi_anger_cos, jacobi_anger_sin};

/// `|z|` at which `J₀` switches from the power series to the asymptotic expansion.
pub const J0_CROSSOVER: f64 = 12.0;
/// Largest supported integer order.
pub const MAX_ORDER: u32 = 200;
/// Hard cap on the number of series terms.
pub const MAX_SERIES_TERMS: usize = 200;
/// Relative size of the next term below which a series is truncated.
pub const SERIES_CUTOFF: f64 = 1e-17;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecfunError {
    #[error("argument must be finite, got {0}")]
    Domain(f64),
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    UnsupportedOrder(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BesselMethod {
    PowerSeries,
    Asymptotic,
    Recurrence,
}

/// A Bessel value together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BesselEvalReport {
    pub value: f64,
    pub method: BesselMethod,
    pub terms_used: usize,
}
