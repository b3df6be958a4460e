//! Numerical integration: adaptive Gauss-Kronrod, sequence acceleration and
//! the semi-infinite oscillatory integrator behind the Weber integral
//! `∫₀^∞ J₀(aτ) cos(bτ) dτ`.

mod accel;
mod kronrod;
mod oscillatory;

use serde::Serialize;
use thiserror::Error;

pub use accel::{accelerate_alternating, euler_average};
pub use kronrod::{integrate_adaptive, integrate_adaptive_abs, PANEL_BUDGET};
pub use oscillatory::{
    integrate_oscillatory_semi_infinite, integrate_two_tone, weber_closed_form, weber_integral, DIVERGENCE_GUARD,
    MAX_DEPTH, MAX_TOTAL_PANELS,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadError {
    #[error("invalid quadrature input: {0}")]
    InvalidInput(String),
    #[error("integrand is not finite at x = {x}")]
    NonFiniteIntegrand { x: f64 },
    #[error("integral diverges: a = {a} and b = {b} coincide (|a - b| < 1e-9 max(a, b))")]
    Divergent { a: f64, b: f64 },
    #[error("acceleration needs at least {needed} partial sums, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("oscillatory integral needs {needed} panels, above the budget of {budget}")]
    BudgetExhausted { needed: usize, budget: usize },
}

/// Outcome of a numerical integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}
