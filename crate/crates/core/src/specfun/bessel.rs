use std::f64::consts::{FRAC_1_SQRT_2, FRAC_2_PI};

use super::ddouble::DoubleDouble;
use super::{BesselEvalReport, BesselMethod, SpecfunError, J0_CROSSOVER, MAX_ORDER, MAX_SERIES_TERMS, SERIES_CUTOFF};

/// `J₀(z)`, accurate to 1e-12 absolute for `|z| ≤ 50`.
///
/// The argument is folded to `|z|` first, so `J₀(−z)` and `J₀(z)` are
/// bitwise identical.
pub fn bessel_j0(z: f64) -> Result<BesselEvalReport, SpecfunError> {
    if !z.is_finite() {
        return Err(SpecfunError::Domain(z));
    }
    let x = z.abs();
    if x < J0_CROSSOVER {
        Ok(power_series(x))
    } else {
        Ok(asymptotic(x))
    }
}

/// `J₀` forced through the ascending series `Σ (−1)ˢ (z/2)²ˢ / (s!)²`.
pub fn j0_power_series(z: f64) -> Result<BesselEvalReport, SpecfunError> {
    if !z.is_finite() {
        return Err(SpecfunError::Domain(z));
    }
    Ok(power_series(z.abs()))
}

/// `J₀` forced through the Hankel asymptotic expansion, truncated at its
/// smallest term. Only meaningful for large `|z|`.
pub fn j0_asymptotic(z: f64) -> Result<BesselEvalReport, SpecfunError> {
    if !z.is_finite() || z == 0.0 {
        return Err(SpecfunError::Domain(z));
    }
    Ok(asymptotic(z.abs()))
}

fn power_series(x: f64) -> BesselEvalReport {
    // term_{s+1} = -term_s * (x/2)^2 / (s+1)^2
    let quarter_sq = DoubleDouble::square_of(x).scale(0.25);
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ONE;
    let mut terms_used = 1;
    for s in 1..MAX_SERIES_TERMS {
        let k = s as f64;
        term = term.mul(quarter_sq).div_f64(k * k).neg();
        if term.hi == 0.0 || term.hi.abs() < SERIES_CUTOFF * sum.hi.abs() {
            break;
        }
        sum = sum.add(term);
        terms_used += 1;
    }
    BesselEvalReport { value: sum.to_f64(), method: BesselMethod::PowerSeries, terms_used }
}

fn asymptotic(x: f64) -> BesselEvalReport {
    // J0(x) ~ sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)]
    // with t_k = a_k(0)/x^k, t_{k+1} = -t_k (2k+1)^2 / (8 (k+1) x)
    let mut p = 0.0;
    let mut q = 0.0;
    let mut t = 1.0_f64;
    let mut terms_used = 0;
    for k in 0..MAX_SERIES_TERMS {
        match k % 4 {
            0 => p += t,
            1 => q += t,
            2 => p -= t,
            _ => q -= t,
        }
        terms_used += 1;
        let kf = k as f64;
        let next = -t * (2.0 * kf + 1.0) * (2.0 * kf + 1.0) / (8.0 * (kf + 1.0) * x);
        if next.abs() >= t.abs() || next.abs() < SERIES_CUTOFF * p.abs() {
            break;
        }
        t = next;
    }
    let (s, c) = x.sin_cos();
    let cos_chi = (c + s) * FRAC_1_SQRT_2;
    let sin_chi = (s - c) * FRAC_1_SQRT_2;
    let value = (FRAC_2_PI / x).sqrt() * (p * cos_chi - q * sin_chi);
    BesselEvalReport { value, method: BesselMethod::Asymptotic, terms_used }
}

/// `J_order(z)` for integer orders up to [`MAX_ORDER`], accurate to 1e-10
/// absolute for `|z| ≤ 50`.
pub fn bessel_jn(order: u32, z: f64) -> Result<f64, SpecfunError> {
    bessel_jn_report(order, z).map(|r| r.value)
}

pub fn bessel_jn_report(order: u32, z: f64) -> Result<BesselEvalReport, SpecfunError> {
    if order > MAX_ORDER {
        return Err(SpecfunError::UnsupportedOrder(order));
    }
    if !z.is_finite() {
        return Err(SpecfunError::Domain(z));
    }
    if order == 0 {
        return bessel_j0(z);
    }
    let x = z.abs();
    let sign = if z < 0.0 && order % 2 == 1 { -1.0 } else { 1.0 };
    if x == 0.0 {
        return Ok(BesselEvalReport { value: 0.0, method: BesselMethod::PowerSeries, terms_used: 1 });
    }
    let n = order as usize;
    let report = if 0.25 * x * x <= n as f64 + 1.0 {
        ascending_series(n, x)
    } else {
        let start = miller_start(n, x);
        let seq = miller_sequence(n, x, start);
        BesselEvalReport { value: seq[n], method: BesselMethod::Recurrence, terms_used: start }
    };
    Ok(BesselEvalReport { value: sign * report.value, ..report })
}

/// `[J₀(z), J₁(z), …, J_max_order(z)]` from a single backward recurrence.
pub fn bessel_jn_sequence(max_order: u32, z: f64) -> Result<Vec<f64>, SpecfunError> {
    if max_order > MAX_ORDER {
        return Err(SpecfunError::UnsupportedOrder(max_order));
    }
    if !z.is_finite() {
        return Err(SpecfunError::Domain(z));
    }
    let n = max_order as usize;
    let x = z.abs();
    if x == 0.0 {
        let mut out = vec![0.0; n + 1];
        out[0] = 1.0;
        return Ok(out);
    }
    let mut seq = miller_sequence(n, x, miller_start(n, x));
    if z < 0.0 {
        seq.iter_mut().skip(1).step_by(2).for_each(|v| *v = -*v);
    }
    Ok(seq)
}

/// `Σ (−1)ˢ (x/2)^(2s+n) / (s! (s+n)!)`; no cancellation when `x²/4 ≤ n+1`.
fn ascending_series(n: usize, x: f64) -> BesselEvalReport {
    let half = 0.5 * x;
    let mut lead = 1.0;
    for k in 1..=n {
        lead *= half / k as f64;
    }
    let quarter_sq = half * half;
    let mut term = lead;
    let mut sum = lead;
    let mut terms_used = 1;
    for s in 1..MAX_SERIES_TERMS {
        term *= -quarter_sq / (s as f64 * (s + n) as f64);
        if term == 0.0 || term.abs() < SERIES_CUTOFF * sum.abs() {
            break;
        }
        sum += term;
        terms_used += 1;
    }
    BesselEvalReport { value: sum, method: BesselMethod::PowerSeries, terms_used }
}

/// Even starting order for the backward recurrence, far enough above both
/// the wanted order and the argument that `J_start` is negligible.
fn miller_start(n: usize, x: f64) -> usize {
    let big = (n as f64).max(x);
    let start = (big + 20.0 + (40.0 * big).sqrt()).ceil() as usize;
    start + start % 2
}

/// Backward recurrence `J_{k-1} = (2k/x) J_k − J_{k+1}` from `start`,
/// normalised by `J₀ + 2 Σ J_{2k} = 1`. Returns orders `0..=n`.
fn miller_sequence(n: usize, x: f64, start: usize) -> Vec<f64> {
    const RESCALE_AT: f64 = 1e250;
    let mut out = vec![0.0; n + 1];
    let mut above = 0.0;
    let mut current = 1e-30;
    let mut norm = 2.0 * current;
    if start <= n {
        out[start] = current;
    }
    for k in (1..=start).rev() {
        let below = (2.0 * k as f64 / x) * current - above;
        above = current;
        current = below;
        let order = k - 1;
        if order <= n {
            out[order] = current;
        }
        if order == 0 {
            norm += current;
        } else if order % 2 == 0 {
            norm += 2.0 * current;
        }
        if current.abs() > RESCALE_AT {
            let f = 1.0 / RESCALE_AT;
            current *= f;
            above *= f;
            norm *= f;
            out.iter_mut().for_each(|v| *v *= f);
        }
    }
    out.iter_mut().for_each(|v| *v /= norm);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j0(z: f64) -> f64 {
        bessel_j0(z).unwrap().value
    }

    #[test]
    fn j0_at_zero() {
        let r = bessel_j0(0.0).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.method, BesselMethod::PowerSeries);
        assert!(r.terms_used >= 1);
    }

    #[test]
    fn j0_at_one() {
        assert!((j0(1.0) - 0.765_197_686_557_966_6).abs() < 1e-15);
    }

    #[test]
    fn j0_first_zero() {
        assert!(j0(2.404_825_557_695_773).abs() <= 1e-12);
    }

    #[test]
    fn j0_method_policy() {
        assert_eq!(bessel_j0(11.999).unwrap().method, BesselMethod::PowerSeries);
        assert_eq!(bessel_j0(12.0).unwrap().method, BesselMethod::Asymptotic);
        assert_eq!(bessel_j0(-40.0).unwrap().method, BesselMethod::Asymptotic);
    }

    #[test]
    fn j0_rejects_non_finite() {
        assert!(matches!(bessel_j0(f64::NAN), Err(SpecfunError::Domain(_))));
        assert!(matches!(bessel_j0(f64::INFINITY), Err(SpecfunError::Domain(_))));
        assert!(matches!(bessel_j0(f64::NEG_INFINITY), Err(SpecfunError::Domain(_))));
    }

    #[test]
    fn method_switch_continuity() {
        for i in 0..=200 {
            let z = 11.0 + 2.0 * i as f64 / 200.0;
            let a = j0_power_series(z).unwrap().value;
            let b = j0_asymptotic(z).unwrap().value;
            assert!((a - b).abs() <= 1e-11, "z={z}: {a} vs {b}");
        }
    }

    #[test]
    fn jn_examples() {
        assert!((bessel_jn(0, 1.0).unwrap() - j0(1.0)).abs() <= 1e-14);
        assert_eq!(bessel_jn(1, 0.0).unwrap(), 0.0);
        assert!((bessel_jn(2, 5.0).unwrap() - 0.046_565_116_277_752_22).abs() <= 1e-13);
        assert!(matches!(bessel_jn(201, 1.0), Err(SpecfunError::UnsupportedOrder(201))));
        assert!(bessel_jn(200, 1.0).is_ok());
    }

    #[test]
    fn jn_parity() {
        for n in 0..6 {
            let s = if n % 2 == 1 { -1.0 } else { 1.0 };
            assert_eq!(bessel_jn(n, -7.3).unwrap(), s * bessel_jn(n, 7.3).unwrap());
        }
    }

    #[test]
    fn sequence_matches_single_orders() {
        for z in [0.3, 4.0, 17.5, -33.0, 50.0] {
            let seq = bessel_jn_sequence(40, z).unwrap();
            for (n, v) in seq.iter().enumerate() {
                let single = bessel_jn(n as u32, z).unwrap();
                assert!((v - single).abs() < 1e-12, "n={n} z={z}: {v} vs {single}");
            }
        }
        assert_eq!(bessel_jn_sequence(3, 0.0).unwrap(), vec![1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn large_order_is_tiny_not_garbage() {
        let v = bessel_jn(200, 50.0).unwrap();
        assert!(v.abs() < 1e-40 && v >= 0.0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn even_symmetry_bitwise(z in -1e3f64..1e3) {
                prop_assert_eq!(j0(z).to_bits(), j0(-z).to_bits());
            }

            #[test]
            fn bounded_by_one(z in -200f64..200.0) {
                prop_assert!(j0(z).abs() <= 1.0 + 1e-12);
            }

            #[test]
            fn derivative_is_minus_j1(z in 0.1f64..40.0) {
                let h = 1e-5;
                let fd = (j0(z + h) - j0(z - h)) / (2.0 * h);
                prop_assert!((fd + bessel_jn(1, z).unwrap()).abs() <= 1e-7);
            }
        }
    }
}
