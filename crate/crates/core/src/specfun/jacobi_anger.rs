//! Truncated Jacobi-Anger expansions of `cos(z cosθ)` and `sin(z cosθ)`.
//!
//! The sine expansion is the standard identity
//! `sin(z cosθ) = 2 Σ_{k≥0} (−1)ᵏ J₂ₖ₊₁(z) cos((2k+1)θ)`.
//! A variant without the leading factor 2 and with index `n ≥ 1`,
//! `Σ_{n≥1} (−1)ⁿ J₂ₙ₋₁(z) cos((2n−1)θ)`, circulates in print; it does not
//! converge to `sin(z cosθ)` (it is `−½` of the correct sum) and is not
//! offered here.

use super::{bessel_jn_sequence, SpecfunError};

/// `J₀(z) + 2 Σ_{k=1..terms} (−1)ᵏ J₂ₖ(z) cos(2kθ)`.
pub fn jacobi_anger_cos(z: f64, theta: f64, terms: u32) -> Result<f64, SpecfunError> {
    let j = bessel_jn_sequence(2 * terms, z)?;
    let mut sum = 0.0;
    // smallest terms first
    for k in (1..=terms as usize).rev() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * j[2 * k] * (2.0 * k as f64 * theta).cos();
    }
    Ok(j[0] + 2.0 * sum)
}

/// `2 Σ_{k=0..terms} (−1)ᵏ J₂ₖ₊₁(z) cos((2k+1)θ)`.
pub fn jacobi_anger_sin(z: f64, theta: f64, terms: u32) -> Result<f64, SpecfunError> {
    let j = bessel_jn_sequence(2 * terms + 1, z)?;
    let mut sum = 0.0;
    for k in (0..=terms as usize).rev() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * j[2 * k + 1] * ((2 * k + 1) as f64 * theta).cos();
    }
    Ok(2.0 * sum)
}
