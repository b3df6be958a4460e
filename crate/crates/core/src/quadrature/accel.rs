//! Acceleration of slowly converging, oscillating partial-sum sequences.

use super::QuadError;

/// Limit of an alternating-type sequence of partial sums by iterated
/// weighted averaging of neighbours.
///
/// Each level replaces `s[k+1], s[k+2]` by the weighted mean
/// `w·s[k+1] + (1 − w)·s[k+2]` with `w = Δ₁/(Δ₁ − Δ₀)`, where `Δ₀, Δ₁` are the
/// two neighbouring corrections. When the corrections alternate with equal
/// magnitude `w = ½` and the step is Euler's plain pairwise average; for
/// geometrically shrinking corrections the weights remove the remainder
/// exactly. The error estimate is the size of the last correction between
/// levels.
pub fn accelerate_alternating(partial_sums: &[f64]) -> Result<(f64, f64), QuadError> {
    const MIN_SUMS: usize = 4;
    if partial_sums.len() < MIN_SUMS {
        return Err(QuadError::InsufficientData { needed: MIN_SUMS, got: partial_sums.len() });
    }
    let mut row = partial_sums.to_vec();
    let mut lasts = vec![row[row.len() - 1]];
    while row.len() >= 3 {
        row = (0..row.len() - 2)
            .map(|k| {
                let d0 = row[k + 1] - row[k];
                let d1 = row[k + 2] - row[k + 1];
                let den = d1 - d0;
                if den == 0.0 || den.abs() <= f64::EPSILON * (d0.abs() + d1.abs()) || !den.is_finite() {
                    row[k + 2]
                } else {
                    (d1 * row[k + 1] - d0 * row[k + 2]) / den
                }
            })
            .collect();
        lasts.push(row[row.len() - 1]);
    }
    let n = lasts.len();
    let limit = lasts[n - 1];
    Ok((limit, (limit - lasts[n - 2]).abs()))
}

/// Euler's transform in its plain form: repeated pairwise averaging with
/// equal weights until one value remains.
///
/// Equal weights exactly cancel any component that flips sign between
/// neighbouring entries, whatever else the sequence does, which makes this
/// the right tool for lattices built on half-periods. The error estimate is
/// the last correction, `|limit − last entry of the previous level|`.
pub fn euler_average(partial_sums: &[f64]) -> Result<(f64, f64), QuadError> {
    if partial_sums.len() < 2 {
        return Err(QuadError::InsufficientData { needed: 2, got: partial_sums.len() });
    }
    let mut row = partial_sums.to_vec();
    let mut prev_last = row[row.len() - 1];
    while row.len() > 1 {
        prev_last = row[row.len() - 1];
        for k in 0..row.len() - 1 {
            row[k] = 0.5 * (row[k] + row[k + 1]);
        }
        row.pop();
    }
    Ok((row[0], (row[0] - prev_last).abs()))
}
