//! WebAssembly bindings behind `www/index.html`.
//!
//! Each export has a plain-Rust twin so the numbers can be tested natively.

use std::f64::consts::PI;

use photon_gas::thermo;
use photon_gas::units::{GasParameters, ReducedState, EV_MASS};
use photon_gas::{NumericsConfig, RadiometryReport};
use wasm_bindgen::prelude::*;

fn log_grid(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>, String> {
    if !(lo > 0.0 && hi > lo && points >= 2) {
        return Err(format!(
            "need 0 < lo < hi and points >= 2, got [{lo}, {hi}] x {points}"
        ));
    }
    let (a, b) = (lo.ln(), hi.ln());
    Ok((0..points)
        .map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp())
        .collect())
}

/// Flat triples `[kT/mc², v̄/c, √(8kT/πmc²)]`; the last is NaN where it
/// would exceed 1.
pub fn mean_speed_curve_native(t_min: f64, t_max: f64, points: usize) -> Result<Vec<f64>, String> {
    let cfg = NumericsConfig::default();
    let mut out = Vec::with_capacity(3 * points);
    for t in log_grid(t_min, t_max, points)? {
        let x = 1.0 / t;
        let state = ReducedState::new(x).map_err(|e| e.to_string())?;
        let v = thermo::reduced_mean_speed(state, &cfg).map_err(|e| e.to_string())?;
        let approx = if x >= 8.0 / PI {
            (8.0 / (PI * x)).sqrt()
        } else {
            f64::NAN
        };
        out.extend([t, v.value, approx]);
    }
    Ok(out)
}

/// Flat triples `[kT/mc², R/R_SB, R/R_naive]`.
pub fn radiance_ratios_native(t_min: f64, t_max: f64, points: usize) -> Result<Vec<f64>, String> {
    let cfg = NumericsConfig::default();
    let sb = thermo::massless_r_hat();
    let mut out = Vec::with_capacity(3 * points);
    for t in log_grid(t_min, t_max, points)? {
        let state = ReducedState::new(1.0 / t).map_err(|e| e.to_string())?;
        let f = thermo::ReducedFunctions::evaluate(state, &cfg).map_err(|e| e.to_string())?;
        out.extend([t, f.r_hat.value / sb, f.r_hat.value / f.r_hat_naive()]);
    }
    Ok(out)
}

/// One point as a JSON object, mass in eV/c².
pub fn point_report_native(mass_ev: f64, temp_k: f64, g: f64) -> Result<String, String> {
    let params =
        GasParameters::with_degeneracy(mass_ev * EV_MASS, temp_k, g).map_err(|e| e.to_string())?;
    let r = RadiometryReport::evaluate(params, &NumericsConfig::default())
        .map_err(|e| e.to_string())?;
    Ok(format!(
        concat!(
            "{{\"x\":{:e},\"n_per_m3\":{:e},\"u_J_per_m3\":{:e},\"vbar_m_per_s\":{:e},",
            "\"R_W_per_m2\":{:e},\"R_naive_W_per_m2\":{:e},\"methods\":\"{}\"}}"
        ),
        r.x.x(),
        r.number_density,
        r.energy_density,
        r.mean_speed,
        r.radiance,
        r.radiance_naive,
        r.method_flags()
    ))
}

#[wasm_bindgen]
pub fn mean_speed_curve(t_min: f64, t_max: f64, points: usize) -> Result<Vec<f64>, JsError> {
    mean_speed_curve_native(t_min, t_max, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn radiance_ratios(t_min: f64, t_max: f64, points: usize) -> Result<Vec<f64>, JsError> {
    radiance_ratios_native(t_min, t_max, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn point_report(mass_ev: f64, temp_k: f64, g: f64) -> Result<String, JsError> {
    point_report_native(mass_ev, temp_k, g).map_err(|e| JsError::new(&e))
}
