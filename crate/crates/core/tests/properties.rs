use std::f64::consts::PI;

use photon_gas::oracle::{self, integrate_adaptive, Domain, QuadratureConfig};
use photon_gas::thermo::{self, NumericsConfig};
use photon_gas::units::{GasParameters, ReducedState, HBAR, K_B};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

#[test]
fn scaling_mass_and_temperature_together() {
    let cfg = NumericsConfig::default();
    for &x in &[0.03, 0.7, 4.0] {
        let base = GasParameters::from_reduced(x, 250.0, 2.0).unwrap();
        for &lambda in &[2.0, 10.0] {
            let scaled =
                GasParameters::new(lambda * base.mass(), lambda * base.temperature()).unwrap();
            let n = thermo::number_density(&scaled, &cfg).unwrap()
                / thermo::number_density(&base, &cfg).unwrap();
            let u = thermo::energy_density(&scaled, &cfg).unwrap()
                / thermo::energy_density(&base, &cfg).unwrap();
            let r = thermo::radiance(&scaled) / thermo::radiance(&base);
            let v = thermo::mean_speed(&scaled, &cfg).unwrap()
                / thermo::mean_speed(&base, &cfg).unwrap();
            assert!(rel(n, lambda.powi(3)) < 1e-10, "n x={x} λ={lambda}");
            assert!(rel(u, lambda.powi(4)) < 1e-10, "u x={x} λ={lambda}");
            assert!(rel(r, lambda.powi(4)) < 1e-10, "R x={x} λ={lambda}");
            assert!(rel(v, 1.0) < 1e-10, "v x={x} λ={lambda}");
        }
    }
}

#[test]
fn mean_speed_and_radiance_decrease_with_x() {
    let cfg = NumericsConfig::default();
    let mut prev_v = 1.0;
    let mut prev_r = thermo::massless_r_hat();
    for x in log_grid(1e-3, 300.0, 80) {
        let state = ReducedState::new(x).unwrap();
        let v = thermo::reduced_mean_speed(state, &cfg).unwrap().value;
        let r = thermo::reduced_radiance(state);
        assert!(v > 0.0 && v < prev_v, "v at x = {x}");
        assert!(r < prev_r, "R at x = {x}");
        prev_v = v;
        prev_r = r;
    }
}

#[test]
fn radiance_slope_matches_polylog_derivative() {
    // dR̂/dx = -(3/2π²)[(x/3)Li₂ + (x²/3)Li₁]
    let h = 1e-5;
    for &x in &[0.2, 1.0, 3.0] {
        let r = |x: f64| thermo::reduced_radiance(ReducedState::new(x).unwrap());
        let fd = (r(x + h) - r(x - h)) / (2.0 * h);
        let li = |s| photon_gas::specfun::polylog_exp(s, x);
        let exact = -1.5 / (PI * PI) * (x / 3.0 * li(2) + x * x / 3.0 * li(1));
        assert!(rel(fd, exact) < 1e-6, "x = {x}");
    }
}

#[test]
fn spectral_density_integrates_to_energy_density() {
    let cfg = NumericsConfig::default();
    let quad = QuadratureConfig::new(1e-11, 60, 50.0).unwrap();
    let t = 300.0;
    for &x in &[0.0, 0.5, 2.0, 10.0] {
        let params = GasParameters::from_reduced(x, t, 2.0).unwrap();
        let threshold = params.rest_energy() / HBAR;
        let integral = integrate_adaptive(
            |w| thermo::spectral_energy_density(w, &params).unwrap(),
            Domain::SemiInfinite {
                lower: threshold,
                decay_rate: HBAR / (K_B * t),
            },
            &quad,
        )
        .unwrap();
        let u = thermo::energy_density(&params, &cfg).unwrap();
        assert!(
            rel(integral.value, u) < 1e-8,
            "x = {x}: {} vs {u}",
            integral.value
        );
    }
}

#[test]
fn quadrature_below_switch_agrees_with_series_beyond_it() {
    // the series is still valid below x_switch, only slower
    let cfg = NumericsConfig::default();
    for &x in &[0.02, 0.05, 0.09] {
        let s = thermo::series_reduced(x, &cfg.series).unwrap();
        let q = thermo::quadrature_reduced(x, &cfg.quadrature).unwrap();
        assert!(rel(s.n_hat, q.n_hat) < 1e-8);
        assert!(rel(s.v_hat, q.v_hat) < 1e-8);
        assert!(rel(s.u_hat, q.u_hat) < 1e-8);
        assert!(rel(s.r_hat, q.r_hat) < 1e-8);
    }
}

#[test]
fn oracle_matches_closed_forms_on_grid() {
    let cfg = NumericsConfig::default();
    for &x in &[0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
        let s = thermo::series_reduced(x, &cfg.series).unwrap();
        let state = ReducedState::new(x).unwrap();
        let n = oracle::quad_number_density(state, &cfg.quadrature)
            .unwrap()
            .value;
        let v = oracle::quad_mean_speed(state, &cfg.quadrature)
            .unwrap()
            .value;
        let r = oracle::quad_radiance(state, &cfg.quadrature).unwrap().value;
        assert!(rel(s.n_hat, n) < 1e-8, "n at {x}");
        assert!(rel(s.v_hat, v) < 1e-8, "v at {x}");
        assert!(rel(s.r_hat, r) < 1e-8, "R at {x}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_quantities_respect_bounds(log_x in -4.0f64..2.5) {
        let cfg = NumericsConfig::default();
        let x = 10f64.powf(log_x);
        let f = thermo::ReducedFunctions::evaluate(ReducedState::new(x).unwrap(), &cfg).unwrap();
        prop_assert!(f.v_hat.value > 0.0 && f.v_hat.value < 1.0);
        prop_assert!(f.r_hat.value < PI * PI / 60.0);
        prop_assert!(f.r_hat.value < f.r_hat_naive());
        prop_assert!(f.u_hat.value >= x * f.n_hat.value);
        prop_assert!(f.n_hat.value < thermo::massless_n_hat());
    }

    #[test]
    fn degeneracy_scales_extensive_quantities(g in 0.5f64..4.0, log_x in -2.0f64..1.5) {
        let cfg = NumericsConfig::default();
        let x = 10f64.powf(log_x);
        let two = GasParameters::from_reduced(x, 100.0, 2.0).unwrap();
        let other = GasParameters::with_degeneracy(two.mass(), 100.0, g).unwrap();
        let n2 = thermo::number_density(&two, &cfg).unwrap();
        let ng = thermo::number_density(&other, &cfg).unwrap();
        prop_assert!(rel(ng, n2 * g / 2.0) < 1e-14);
        prop_assert!(rel(thermo::radiance(&other), thermo::radiance(&two) * g / 2.0) < 1e-14);
        prop_assert_eq!(
            thermo::mean_speed(&two, &cfg).unwrap(),
            thermo::mean_speed(&other, &cfg).unwrap()
        );
    }
}
