//! Semi-infinite integrals of two-tone oscillatory integrands, and the Weber
//! integral `∫₀^∞ J₀(aτ) cos(bτ) dτ` in particular.
//!
//! For large `τ` an integrand such as `J₀(aτ)cos(bτ)` behaves like a sum of
//! two cosines with frequencies `a + b` and `|a − b|` under envelopes that
//! decay like `τ^(−1/2)`. Its running integral `F(T) = ∫₀^T` therefore
//! oscillates about the limit with both frequencies. Averaging `F(T)` and
//! `F(T + π/ω)` cancels the leading part of the component at frequency `ω`,
//! leaving a remainder smaller by a factor of order `1/(ωT)`. The engine
//! evaluates `F` on the lattice
//!
//! ```text
//! T(i, j) = T₀ + i·π/(a+b) + j·π/|a−b|,   0 ≤ i, j ≤ depth
//! ```
//!
//! and applies Euler's plain pairwise averaging first along `i` (killing the
//! fast tone) and then along `j` (killing the slow beat). The depth grows in
//! steps of two until two consecutive extrapolations agree to a quarter of
//! the tolerance.
//!
//! `F` itself is built from Gauss-Kronrod panels no longer than
//! `π/max(a, b)`, the spacing of the zeros of the faster oscillator, with
//! the lattice points as extra breakpoints.

use std::f64::consts::PI;

use super::{euler_average, integrate_adaptive_abs, QuadError, QuadResult};
use crate::specfun::bessel_j0;

/// `|a − b| < DIVERGENCE_GUARD·max(a, b)` is treated as the divergent case `a = b`.
pub const DIVERGENCE_GUARD: f64 = 1e-9;
/// Deepest averaging level attempted.
pub const MAX_DEPTH: usize = 30;
/// Cap on the number of panels one oscillatory integral may use.
pub const MAX_TOTAL_PANELS: usize = 2_000_000;

const MIN_DEPTH: usize = 4;
const DEPTH_STEP: usize = 2;
/// Start of the lattice, in slow half-periods `π/|a−b|`.
const START_HALF_PERIODS: f64 = 8.0;

/// `∫₀^∞ J₀(aτ) cos(bτ) dτ` evaluated numerically.
pub fn weber_integral(a: f64, b: f64, tol: f64) -> Result<QuadResult, QuadError> {
    integrate_oscillatory_semi_infinite(|x| bessel_j0(x).map_or(f64::NAN, |r| r.value), a, b, tol)
}

/// `∫₀^∞ envelope(aτ) cos(bτ) dτ` for an `envelope` that asymptotically
/// oscillates at unit frequency under a slowly decaying amplitude
/// (`J₀(x)`, `sin(x)/x`, ...).
pub fn integrate_oscillatory_semi_infinite<E: Fn(f64) -> f64>(
    envelope: E,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadResult, QuadError> {
    integrate_two_tone(|t| envelope(a * t) * (b * t).cos(), a, b, tol)
}

/// `∫₀^∞ f(τ) dτ` where `f` asymptotically oscillates with frequencies
/// `a + b` and `|a − b|` under slowly decaying envelopes. `tol` is absolute.
pub fn integrate_two_tone<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult, QuadError> {
    check_frequencies(a, b)?;
    if !(tol.is_finite() && tol > 0.0) {
        return Err(QuadError::InvalidInput(format!("tolerance must be > 0, got {tol}")));
    }

    let fast = PI / (a + b);
    let slow = PI / (a - b).abs();
    let panel = PI / a.max(b);
    let start = START_HALF_PERIODS * slow;
    let reach = |depth: usize| start + depth as f64 * (fast + slow);
    let panels_for = |depth: usize| (reach(depth) / panel).ceil() as usize;

    let needed = panels_for(MIN_DEPTH);
    if needed > MAX_TOTAL_PANELS {
        return Err(QuadError::BudgetExhausted { needed, budget: MAX_TOTAL_PANELS });
    }

    let panel_tol = 1e-3 * tol / panels_for(MAX_DEPTH) as f64;
    let mut running = RunningIntegral::new(&f, panel, panel_tol);

    let mut previous: Option<f64> = None;
    let mut best = QuadResult { value: f64::NAN, abs_error_estimate: f64::INFINITY, evaluations: 0, converged: false };
    let mut depth = MIN_DEPTH;
    while depth <= MAX_DEPTH && panels_for(depth) <= MAX_TOTAL_PANELS {
        let estimate = lattice_estimate(&mut running, start, fast, slow, depth)?;
        if let Some(prev) = previous {
            let correction = (estimate - prev).abs();
            let abs_error_estimate = correction + running.error;
            best = QuadResult {
                value: estimate,
                abs_error_estimate,
                evaluations: running.evaluations,
                converged: correction < 0.25 * tol && abs_error_estimate <= tol,
            };
            if best.converged {
                return Ok(best);
            }
        }
        previous = Some(estimate);
        depth += DEPTH_STEP;
    }
    Ok(best)
}

/// `1/√(a² − b²)` for `0 < b < a`, `0` for `0 < a < b`.
pub fn weber_closed_form(a: f64, b: f64) -> Result<f64, QuadError> {
    check_frequencies(a, b)?;
    if b < a {
        Ok(1.0 / ((a - b) * (a + b)).sqrt())
    } else {
        Ok(0.0)
    }
}

fn check_frequencies(a: f64, b: f64) -> Result<(), QuadError> {
    if !(a.is_finite() && a > 0.0 && b.is_finite() && b > 0.0) {
        return Err(QuadError::InvalidInput(format!("frequencies must be finite and > 0, got a = {a}, b = {b}")));
    }
    if (a - b).abs() < DIVERGENCE_GUARD * a.max(b) {
        return Err(QuadError::Divergent { a, b });
    }
    Ok(())
}

fn lattice_estimate<F: Fn(f64) -> f64>(
    running: &mut RunningIntegral<'_, F>,
    start: f64,
    fast: f64,
    slow: f64,
    depth: usize,
) -> Result<f64, QuadError> {
    let n = depth + 1;
    let mut points: Vec<(f64, usize)> = (0..n * n)
        .map(|idx| {
            let (j, i) = (idx / n, idx % n);
            (start + i as f64 * fast + j as f64 * slow, idx)
        })
        .collect();
    points.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut values = vec![0.0; n * n];
    for (t, idx) in points {
        values[idx] = running.at(t)?;
    }
    let inner = values.chunks(n).map(|row| euler_average(row).map(|r| r.0)).collect::<Result<Vec<_>, _>>()?;
    Ok(euler_average(&inner)?.0)
}

/// `F(T) = ∫₀^T f`, cached at every `T` requested so far.
struct RunningIntegral<'f, F> {
    f: &'f F,
    panel: f64,
    panel_tol: f64,
    knots: Vec<(f64, f64)>,
    evaluations: usize,
    error: f64,
}

impl<'f, F: Fn(f64) -> f64> RunningIntegral<'f, F> {
    fn new(f: &'f F, panel: f64, panel_tol: f64) -> Self {
        Self { f, panel, panel_tol, knots: vec![(0.0, 0.0)], evaluations: 0, error: 0.0 }
    }

    fn at(&mut self, t: f64) -> Result<f64, QuadError> {
        let idx = self.knots.partition_point(|k| k.0 <= t);
        let (from, mut acc) = self.knots[idx - 1];
        if from == t {
            return Ok(acc);
        }
        let pieces = ((t - from) / self.panel).ceil().max(1.0) as usize;
        let width = (t - from) / pieces as f64;
        for p in 0..pieces {
            let lo = from + p as f64 * width;
            let hi = if p + 1 == pieces { t } else { lo + width };
            let r = integrate_adaptive_abs(self.f, lo, hi, self.panel_tol)?;
            acc += r.value;
            self.error += r.abs_error_estimate;
            self.evaluations += r.evaluations;
        }
        self.knots.insert(idx, (t, acc));
        Ok(acc)
    }
}
