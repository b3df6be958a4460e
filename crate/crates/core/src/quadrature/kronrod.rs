//! Globally adaptive 15-point Kronrod / 7-point Gauss quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{QuadError, QuadResult};

/// Maximum number of panels a single adaptive integration may create.
pub const PANEL_BUDGET: usize = 10_000;

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
    /// error at the round-off floor; splitting cannot help
    settled: bool,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err).then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<Panel, QuadError> {
    let centre = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let eval = |x: f64| -> Result<f64, QuadError> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(QuadError::NonFiniteIntegrand { x })
        }
    };

    let fc = eval(centre)?;
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = fc.abs() * WGK[7];
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(centre - dx)?;
        let f2 = eval(centre + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let width = half.abs();
    let res_asc = res_asc * width;
    let res_abs = res_abs * width;
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * res_abs;
    let settled = err <= floor;
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(floor);
    }
    Ok(Panel { lo, hi, value: res_k * half, err, settled })
}

enum Target {
    Mixed(f64),
    Absolute(f64),
}

impl Target {
    fn met(&self, value: f64, err: f64) -> bool {
        match *self {
            Target::Mixed(tol) => err <= tol.max(tol * value.abs()),
            Target::Absolute(tol) => err <= tol,
        }
    }
}

/// Integrates `f` over `[lo, hi]`, bisecting the panel with the largest
/// error estimate until `error ≤ max(tol, tol·|value|)`.
///
/// If the panel budget runs out the best estimate is returned with
/// `converged = false`.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadResult, QuadError> {
    adaptive(&f, lo, hi, Target::Mixed(tol))
}

/// As [`integrate_adaptive`], but with a purely absolute tolerance. Panels
/// whose error has reached the round-off floor are not split further.
pub fn integrate_adaptive_abs<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadResult, QuadError> {
    adaptive(&f, lo, hi, Target::Absolute(tol))
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, target: Target) -> Result<QuadResult, QuadError> {
    let tol = match target {
        Target::Mixed(t) | Target::Absolute(t) => t,
    };
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(QuadError::InvalidInput(format!("need finite lo < hi, got [{lo}, {hi}]")));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(QuadError::InvalidInput(format!("tolerance must be > 0, got {tol}")));
    }

    let first = gauss_kronrod(f, lo, hi)?;
    let mut evaluations = 15;
    let mut value = first.value;
    let mut err = first.err;
    let mut live = BinaryHeap::new();
    let mut done: Vec<Panel> = Vec::new();
    if first.settled {
        done.push(first);
    } else {
        live.push(first);
    }
    let mut panels = 1;
    let mut converged = target.met(value, err);

    while !converged {
        let Some(worst) = live.pop() else {
            // every panel is at the round-off floor
            converged = true;
            break;
        };
        if panels + 1 > PANEL_BUDGET {
            live.push(worst);
            break;
        }
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            done.push(worst);
            continue;
        }
        let left = gauss_kronrod(f, worst.lo, mid)?;
        let right = gauss_kronrod(f, mid, worst.hi)?;
        evaluations += 30;
        panels += 1;
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        for p in [left, right] {
            if p.settled {
                done.push(p);
            } else {
                live.push(p);
            }
        }
        converged = target.met(value, err.max(0.0));
    }

    // fixed-order re-summation, independent of heap order
    let mut all: Vec<Panel> = done.into_iter().chain(live).collect();
    all.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    let value: f64 = all.iter().map(|p| p.value).sum();
    let err: f64 = all.iter().map(|p| p.err).sum();
    let converged = converged && target.met(value, err);
    Ok(QuadResult { value, abs_error_estimate: err, evaluations, converged })
}
