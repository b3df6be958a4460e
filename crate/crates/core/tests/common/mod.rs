//! Exact-arithmetic reference values shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Fractional bits of the fixed-point representation.
const SCALE: u64 = 480;

/// `x` as a fixed-point integer `round(x · 2^SCALE)`; exact for any double of
/// magnitude ≥ 2^-400.
fn fixed(x: f64) -> BigInt {
    if x == 0.0 {
        return BigInt::zero();
    }
    let bits = x.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mantissa, exp) = if exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), exp - 1075) };
    let m = BigInt::from(mantissa);
    let shift = exp + SCALE as i64;
    let mag = if shift >= 0 { m << shift as u64 } else { m >> (-shift) as u64 };
    if x < 0.0 {
        -mag
    } else {
        mag
    }
}

fn to_f64(v: &BigInt) -> f64 {
    // keep 64 significant fractional bits, then scale down in floating point
    let top = v >> (SCALE - 64);
    top.to_f64().unwrap() / 2f64.powi(64)
}

fn mul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> SCALE
}

/// `J_n(x)` from its ascending series, summed in 480-bit fixed point.
/// Accurate to far below double precision for `|x| ≤ 60`, `n ≤ 60`.
pub fn bessel_jn_oracle(n: u32, x: f64) -> f64 {
    let half = fixed(x / 2.0);
    let q = mul(&half, &half);
    let mut lead = BigInt::one() << SCALE;
    for k in 1..=n {
        lead = mul(&lead, &half) / BigInt::from(k);
    }
    let mut term = lead;
    let mut sum = term.clone();
    let mut k: u64 = 0;
    loop {
        k += 1;
        term = -mul(&term, &q) / BigInt::from(k * (k + n as u64));
        if term.is_zero() || (term.abs().bits() + 8 < 64 && k > 10) {
            break;
        }
        sum += &term;
        assert!(k < 10_000, "oracle series did not terminate");
    }
    to_f64(&sum)
}

pub fn bessel_j0_oracle(x: f64) -> f64 {
    bessel_jn_oracle(0, x)
}

#[test]
fn oracle_self_check() {
    assert_eq!(bessel_j0_oracle(0.0), 1.0);
    assert!((bessel_j0_oracle(1.0) - 0.765_197_686_557_966_6).abs() < 1e-16);
    assert!(bessel_j0_oracle(2.404_825_557_695_773).abs() < 1e-15);
    assert!((bessel_jn_oracle(1, 1.0) - 0.440_050_585_744_933_5).abs() < 1e-16);
    // large argument: J0(50) from tables
    assert!((bessel_j0_oracle(50.0) - 0.055_812_327_669_251_815).abs() < 1e-15);
}
