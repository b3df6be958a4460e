use proptest::prelude::*;

use cerenkov::quadrature::{integrate_adaptive, weber_closed_form, weber_integral};
use cerenkov::radiation::{
    photon_rate, scan_spectrum, spectral_power_2d_closed, spectral_power_2d_numeric, spectral_power_3d, Dimensionality,
};
use cerenkov::{cherenkov_parameter, DispersionModel, FrequencyGrid, Medium, Particle, ThresholdStatus, UnitSystem};

const RED: UnitSystem = UnitSystem::reduced();

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn sheet_numeric_agrees_with_closed_form(x in 1.05f64..3.0, beta in 0.4f64..0.999, omega in prop::sample::select(vec![0.5, 1.0, 5.0])) {
        let m = Medium::with_index(x / beta).unwrap();
        let p = Particle::with_beta(beta).unwrap();
        let numeric = spectral_power_2d_numeric(&m, &p, omega, 1e-8, &RED).unwrap();
        let closed = spectral_power_2d_closed(&m, &p, false, &RED);
        prop_assert!(rel(numeric, closed) <= 1e-6, "{} vs {}", numeric, closed);
    }

    #[test]
    fn weber_scales_inversely(a in 0.5f64..10.0, r in 0.05f64..0.9, k in 0.1f64..10.0) {
        let b = a * r;
        let w1 = weber_integral(a, b, 1e-11).unwrap().value;
        let wk = weber_integral(k * a, k * b, 1e-11 / k).unwrap().value;
        prop_assert!(rel(k * wk, w1) <= 1e-8);
        prop_assert!(rel(w1, weber_closed_form(a, b).unwrap()) <= 1e-8);
    }
}

proptest! {
    #[test]
    fn bulk_power_over_omega_is_constant(n in 1.0f64..4.0, beta in 0.05f64..0.999, mu in 0.2f64..5.0, w1 in 1e-3f64..1e3, w2 in 1e-3f64..1e3) {
        let m = Medium::new(n, mu).unwrap();
        let p = Particle::with_beta(beta).unwrap();
        let p1 = spectral_power_3d(&m, &p, w1, &RED).unwrap();
        let p2 = spectral_power_3d(&m, &p, w2, &RED).unwrap();
        if n * beta > 1.0 {
            prop_assert!(rel(p1 / w1, p2 / w2) <= 1e-14);
        } else {
            prop_assert!(p1 == 0.0 && p2 == 0.0);
        }
    }

    #[test]
    fn sheet_power_falls_toward_threshold(beta in 0.3f64..0.999) {
        let samples: Vec<f64> = (1..=6)
            .map(|k| {
                let m = Medium::with_index((1.0 + 10f64.powi(-k)) / beta).unwrap();
                spectral_power_2d_closed(&m, &Particle::with_beta(beta).unwrap(), false, &RED)
            })
            .collect();
        prop_assert!(samples.windows(2).all(|w| w[1] < w[0] && w[1] > 0.0));
    }

    #[test]
    fn doubling_charge_quadruples_everything(n in 1.0f64..4.0, beta in 0.05f64..0.999, q in -5.0f64..5.0, omega in 0.01f64..100.0, cgs in any::<bool>()) {
        prop_assume!(q.abs() > 1e-3);
        let units = if cgs { UnitSystem::gaussian_cgs() } else { RED };
        let m = Medium::with_index(n).unwrap();
        let single = Particle::new(q, beta).unwrap();
        let double = Particle::new(2.0 * q, beta).unwrap();
        for doubled in [false, true] {
            prop_assert_eq!(
                spectral_power_2d_closed(&m, &double, doubled, &units),
                4.0 * spectral_power_2d_closed(&m, &single, doubled, &units)
            );
        }
        let p1 = spectral_power_3d(&m, &single, omega, &units).unwrap();
        let p2 = spectral_power_3d(&m, &double, omega, &units).unwrap();
        prop_assert_eq!(p2, 4.0 * p1);
        prop_assert_eq!(photon_rate(p2, omega, &units), 4.0 * photon_rate(p1, omega, &units));
    }

    #[test]
    fn switching_units_rescales_by_one_constant(n in 1.0f64..4.0, beta in 0.05f64..0.999, mu in 0.2f64..5.0, omega in 0.01f64..100.0) {
        let cgs = UnitSystem::gaussian_cgs();
        let factor = cgs.elementary_charge().powi(2) / cgs.light_speed();
        let m = Medium::new(n, mu).unwrap();
        let p = Particle::with_beta(beta).unwrap();

        let pairs = [
            (spectral_power_2d_closed(&m, &p, false, &RED), spectral_power_2d_closed(&m, &p, false, &cgs)),
            (spectral_power_3d(&m, &p, omega, &RED).unwrap(), spectral_power_3d(&m, &p, omega, &cgs).unwrap()),
        ];
        for (reduced, gaussian) in pairs {
            if reduced == 0.0 {
                prop_assert_eq!(gaussian, 0.0);
            } else {
                prop_assert!(rel(gaussian / reduced, factor) <= 1e-14);
            }
        }
        prop_assert_eq!(ThresholdStatus::of(&m, &p), ThresholdStatus::classify(cherenkov_parameter(&m, &p)));
    }

    #[test]
    fn scan_is_pointwise(resonance in 5.0f64..50.0, strength in 0.1f64..2.0, beta in 0.5f64..0.99, count in 2usize..200, log in any::<bool>()) {
        let model = DispersionModel::single_resonance(resonance, strength).unwrap();
        let hi = 0.9 * resonance;
        let grid = if log {
            FrequencyGrid::logarithmic(0.01 * resonance, hi, count)
        } else {
            FrequencyGrid::linear(0.01 * resonance, hi, count)
        }
        .unwrap();
        let p = Particle::with_beta(beta).unwrap();
        for dim in [Dimensionality::TwoD, Dimensionality::ThreeD] {
            let result = scan_spectrum(dim, &model, 1.0, &p, &grid, &RED, false).unwrap();
            prop_assert_eq!(result.points.len(), grid.len());
            for (pt, &omega) in result.points.iter().zip(grid.points()) {
                let m = Medium::from_dispersion(&model, omega, 1.0).unwrap();
                let expected = match dim {
                    Dimensionality::TwoD => spectral_power_2d_closed(&m, &p, false, &RED),
                    Dimensionality::ThreeD => spectral_power_3d(&m, &p, omega, &RED).unwrap(),
                };
                prop_assert_eq!(pt.power_density.to_bits(), expected.to_bits());
                if m.refractive_index() * beta <= 1.0 {
                    prop_assert_eq!(pt.power_density, 0.0);
                }
            }
        }
    }

    #[test]
    fn quadrature_is_linear(c1 in -3.0f64..3.0, c2 in -3.0f64..3.0, hi in 0.5f64..6.0) {
        let f = |x: f64| (3.0 * x).sin() * (-x).exp();
        let g = |x: f64| x * x / (1.0 + x);
        let lhs = integrate_adaptive(|x| c1 * f(x) + c2 * g(x), 0.0, hi, 1e-12).unwrap().value;
        let rhs = c1 * integrate_adaptive(f, 0.0, hi, 1e-12).unwrap().value
            + c2 * integrate_adaptive(g, 0.0, hi, 1e-12).unwrap().value;
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs()));
    }
}
