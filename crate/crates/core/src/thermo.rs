//! Number density, mean speed, energy density and radiance of the massive
//! photon gas.
//!
//! Reduced forms (with the two-polarization prefactor):
//!
//! ```text
//! n̂ = N/V · (ħc/kT)³         = x²/π² · Σ K₂(nx)/n
//! û = U/V · (ħc)³/(kT)⁴      = x⁴/π² · Σ [K₁(nx)/(nx) + 3K₂(nx)/(nx)²]
//! v̂ = v̄/c                   = 2[Li₃(e⁻ˣ) + x Li₂(e⁻ˣ)] / (x² Σ K₂(nx)/n)
//! R̂ = R · ħ³c²/(kT)⁴         = 3/(2π²) · [Li₄(e⁻ˣ) + x Li₃(e⁻ˣ) + x²/3 Li₂(e⁻ˣ)]
//! ```
//!
//! The Bessel sums converge slowly as `x → 0`, so below
//! [`NumericsConfig::x_switch`] the number density, energy density and mean
//! speed are evaluated by quadrature instead. `m = 0` always takes the exact
//! massless branch.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::oracle::{self, QuadratureConfig};
use crate::specfun::{self, SeriesTolerance};
use crate::units::{self, GasParameters, ReducedState, C, HBAR};

/// Tolerances and the series/quadrature regime boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericsConfig {
    pub series: SeriesTolerance,
    pub quadrature: QuadratureConfig,
    /// Below this `x` the Bessel sums are replaced by quadrature.
    pub x_switch: f64,
    /// Use the Bessel series for `U/V` at `x ≥ x_switch`.
    pub energy_series: bool,
}

impl NumericsConfig {
    pub const DEFAULT_X_SWITCH: f64 = 0.1;

    pub fn with_x_switch(mut self, x_switch: f64) -> Result<Self> {
        if !(x_switch.is_finite() && x_switch > 0.0) {
            return Err(Error::Config(format!(
                "x_switch must be > 0, got {x_switch}"
            )));
        }
        self.x_switch = x_switch;
        Ok(self)
    }
}

impl Default for NumericsConfig {
    fn default() -> Self {
        NumericsConfig {
            series: SeriesTolerance::default(),
            quadrature: QuadratureConfig::default(),
            x_switch: Self::DEFAULT_X_SWITCH,
            energy_series: true,
        }
    }
}

/// How a quantity was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Series,
    Quadrature,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Quadrature => "quadrature",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A reduced quantity together with the method that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tagged {
    pub value: f64,
    pub method: Method,
}

/// Plain reduced values, as produced by one evaluation route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedValues {
    pub n_hat: f64,
    pub u_hat: f64,
    pub v_hat: f64,
    pub r_hat: f64,
}

/// The four dimensionless kernels at one `x`, each tagged with its method.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedFunctions {
    pub x: f64,
    pub n_hat: Tagged,
    pub u_hat: Tagged,
    pub v_hat: Tagged,
    pub r_hat: Tagged,
}

impl ReducedFunctions {
    pub fn evaluate(x: ReducedState, cfg: &NumericsConfig) -> Result<Self> {
        Ok(ReducedFunctions {
            x: x.x(),
            n_hat: reduced_number_density(x, cfg)?,
            u_hat: reduced_energy_density(x, cfg)?,
            v_hat: reduced_mean_speed(x, cfg)?,
            r_hat: Tagged {
                value: reduced_radiance(x),
                method: Method::Series,
            },
        })
    }

    /// Naive radiance `(c/4)·U/V` in reduced units, i.e. `û/4`.
    pub fn r_hat_naive(&self) -> f64 {
        self.u_hat.value / 4.0
    }
}

fn series(value: f64) -> Tagged {
    Tagged {
        value,
        method: Method::Series,
    }
}

fn quadrature(value: f64) -> Tagged {
    Tagged {
        value,
        method: Method::Quadrature,
    }
}

fn zeta(s: u32) -> f64 {
    specfun::zeta_value(s).expect("s in 2..=4")
}

/// Massless `n̂ = 2ζ(3)/π²`.
pub fn massless_n_hat() -> f64 {
    2.0 * zeta(3) / (PI * PI)
}

/// Massless `û = π²/15`.
pub fn massless_u_hat() -> f64 {
    PI * PI / 15.0
}

/// Massless `R̂ = π²/60`, written as `û/4` so that it equals the naive
/// radiance bit for bit.
pub fn massless_r_hat() -> f64 {
    massless_u_hat() / 4.0
}

pub fn reduced_number_density(x: ReducedState, cfg: &NumericsConfig) -> Result<Tagged> {
    let x = x.x();
    if x == 0.0 {
        return Ok(series(massless_n_hat()));
    }
    if x >= cfg.x_switch {
        Ok(series(series_n_hat(x, &cfg.series)?))
    } else {
        let est = oracle::quad_number_density(ReducedState::new(x)?, &cfg.quadrature)?;
        Ok(quadrature(est.value))
    }
}

pub fn reduced_energy_density(x: ReducedState, cfg: &NumericsConfig) -> Result<Tagged> {
    let x = x.x();
    if x == 0.0 {
        return Ok(series(massless_u_hat()));
    }
    if cfg.energy_series && x >= cfg.x_switch {
        Ok(series(series_u_hat(x, &cfg.series)?))
    } else {
        let est = oracle::quad_energy_density(ReducedState::new(x)?, &cfg.quadrature)?;
        Ok(quadrature(est.value))
    }
}

pub fn reduced_mean_speed(x: ReducedState, cfg: &NumericsConfig) -> Result<Tagged> {
    let x = x.x();
    if x == 0.0 {
        return Ok(series(1.0));
    }
    if x >= cfg.x_switch {
        Ok(series(series_v_hat(x, &cfg.series)?))
    } else {
        let est = oracle::quad_mean_speed(ReducedState::new(x)?, &cfg.quadrature)?;
        Ok(quadrature(est.value))
    }
}

/// Closed-form reduced radiance, valid for every `x ≥ 0`.
pub fn reduced_radiance(x: ReducedState) -> f64 {
    let x = x.x();
    if x == 0.0 {
        return massless_r_hat();
    }
    radiance_bracket_scaled(x) * (-x).exp() * 1.5 / (PI * PI)
}

// eˣ·[Li₄ + x Li₃ + x²/3 Li₂](e⁻ˣ)
fn radiance_bracket_scaled(x: f64) -> f64 {
    let li = |s| specfun::polylog_exp_scaled(s, x);
    li(4) + x * li(3) + x * x / 3.0 * li(2)
}

/// Series route for `n̂`, ignoring `x_switch`.
pub fn series_n_hat(x: f64, tol: &SeriesTolerance) -> Result<f64> {
    let sum = specfun::k2_weighted_sum(x, tol)?;
    Ok(x * x / (PI * PI) * sum.value())
}

/// Series route for `û`, ignoring `x_switch`.
pub fn series_u_hat(x: f64, tol: &SeriesTolerance) -> Result<f64> {
    let sum = specfun::k_energy_sum(x, tol)?;
    Ok(x.powi(4) / (PI * PI) * sum.value())
}

/// Series route for `v̄/c`, ignoring `x_switch`. Both numerator and
/// denominator are carried with the factor `eˣ` removed.
pub fn series_v_hat(x: f64, tol: &SeriesTolerance) -> Result<f64> {
    let sum = specfun::k2_weighted_sum(x, tol)?;
    let numerator = specfun::polylog_exp_scaled(3, x) + x * specfun::polylog_exp_scaled(2, x);
    Ok((2.0 * numerator / (x * x * sum.scaled)).min(1.0))
}

/// All four reduced quantities by the closed forms.
pub fn series_reduced(x: f64, tol: &SeriesTolerance) -> Result<ReducedValues> {
    Ok(ReducedValues {
        n_hat: series_n_hat(x, tol)?,
        u_hat: series_u_hat(x, tol)?,
        v_hat: series_v_hat(x, tol)?,
        r_hat: reduced_radiance(ReducedState::new(x)?),
    })
}

/// All four reduced quantities by quadrature of the defining integrals.
pub fn quadrature_reduced(x: f64, cfg: &QuadratureConfig) -> Result<ReducedValues> {
    let x = ReducedState::new(x)?;
    Ok(ReducedValues {
        n_hat: oracle::quad_number_density(x, cfg)?.value,
        u_hat: oracle::quad_energy_density(x, cfg)?.value,
        v_hat: oracle::quad_mean_speed(x, cfg)?.value,
        r_hat: oracle::quad_radiance(x, cfg)?.value,
    })
}

// SI conversion factors. kT/ħc is formed first to stay clear of ħ³.
fn inverse_length(params: &GasParameters) -> f64 {
    params.thermal_energy() / (HBAR * C)
}

fn number_scale(params: &GasParameters) -> f64 {
    params.degeneracy_factor() * inverse_length(params).powi(3)
}

fn energy_scale(params: &GasParameters) -> f64 {
    number_scale(params) * params.thermal_energy()
}

fn radiance_scale(params: &GasParameters) -> f64 {
    energy_scale(params) * C
}

/// Photon number density `N/V` in m⁻³.
pub fn number_density(params: &GasParameters, cfg: &NumericsConfig) -> Result<f64> {
    let n = reduced_number_density(units::reduce(params), cfg)?;
    Ok(number_scale(params) * n.value)
}

/// Mean photon speed in m/s; independent of the degeneracy.
pub fn mean_speed(params: &GasParameters, cfg: &NumericsConfig) -> Result<f64> {
    if params.is_massless() {
        return Ok(C);
    }
    let v = reduced_mean_speed(units::reduce(params), cfg)?;
    Ok(C * v.value)
}

/// Energy density `U/V` in J/m³.
pub fn energy_density(params: &GasParameters, cfg: &NumericsConfig) -> Result<f64> {
    let u = reduced_energy_density(units::reduce(params), cfg)?;
    Ok(energy_scale(params) * u.value)
}

/// Radiance (power per unit area leaving a small opening) in W/m².
pub fn radiance(params: &GasParameters) -> f64 {
    radiance_scale(params) * reduced_radiance(units::reduce(params))
}

/// `(c/4)·U/V`, which equals the radiance only for massless photons.
pub fn radiance_naive(params: &GasParameters, cfg: &NumericsConfig) -> Result<f64> {
    let u = reduced_energy_density(units::reduce(params), cfg)?;
    Ok(radiance_scale(params) * u.value / 4.0)
}

/// Speed of a photon of energy `energy` (J): `c·√(1 - (mc²/ε)²)`.
pub fn photon_speed(energy: f64, mass: f64) -> Result<f64> {
    let rest = mass * C * C;
    if !(energy.is_finite() && mass.is_finite() && mass >= 0.0) || energy < rest || energy <= 0.0 {
        return Err(Error::Domain {
            what: "photon_speed energy",
            value: energy,
            expected: "energy >= mc² (on or above the mass shell)",
        });
    }
    if mass == 0.0 {
        return Ok(C);
    }
    Ok(C * ((energy - rest) * (energy + rest)).sqrt() / energy)
}

/// Spectral energy density `u(ω, T, m)` in J·s/m³, zero at and below the
/// threshold `ω = mc²/ħ`.
pub fn spectral_energy_density(omega: f64, params: &GasParameters) -> Result<f64> {
    if !(omega.is_finite() && omega >= 0.0) {
        return Err(Error::Domain {
            what: "spectral_energy_density omega",
            value: omega,
            expected: "finite and >= 0",
        });
    }
    let threshold = params.rest_energy() / HBAR;
    if omega == 0.0 || omega <= threshold {
        return Ok(0.0);
    }
    let beta_hbar = HBAR / params.thermal_energy();
    let planck = HBAR / (PI * PI * C.powi(3)) * omega.powi(3) / (beta_hbar * omega).exp_m1();
    let phase_space = ((omega - threshold) * (omega + threshold)).sqrt() / omega;
    Ok(params.degeneracy_factor() * planck * phase_space)
}

/// Small-mass radiance `R_SB·(1 - 5x²/(2π²))`; applicable for `x < 1`.
pub fn small_mass_radiance(params: &GasParameters) -> Result<f64> {
    let x = units::reduce(params).x();
    if x >= 1.0 {
        return Err(Error::Regime {
            what: "small_mass_radiance",
            requirement: "x < 1",
            x,
        });
    }
    Ok(radiance_scale(params) * massless_r_hat() * (1.0 - SMALL_MASS_COEFFICIENT * x * x))
}

/// Coefficient of the `x²` deficit in the small-mass radiance, `5/(2π²)`.
pub const SMALL_MASS_COEFFICIENT: f64 = 5.0 / (2.0 * PI * PI);

/// Low-temperature radiance `(1/2ħ³)(mc/π)²(kT)² e^{-x}`; applicable for
/// `x > 1`.
pub fn low_temp_radiance(params: &GasParameters) -> Result<f64> {
    let x = units::reduce(params).x();
    if x <= 1.0 {
        return Err(Error::Regime {
            what: "low_temp_radiance",
            requirement: "x > 1",
            x,
        });
    }
    Ok(radiance_scale(params) * low_temp_r_hat(x))
}

/// Reduced low-temperature radiance `x² e^{-x}/(2π²)`.
pub fn low_temp_r_hat(x: f64) -> f64 {
    x * x * (-x).exp() / (2.0 * PI * PI)
}

/// Nonrelativistic mean speed `√(8kT/πm)`; it exceeds `c` below
/// `x = 8/π`, which is rejected.
pub fn low_temp_mean_speed(params: &GasParameters) -> Result<f64> {
    let x = units::reduce(params).x();
    if x < 8.0 / PI {
        return Err(Error::Regime {
            what: "low_temp_mean_speed",
            requirement: "x >= 8/π",
            x,
        });
    }
    Ok((8.0 * params.thermal_energy() / (PI * params.mass())).sqrt())
}

/// One full evaluation at `(m, T)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiometryReport {
    pub params: GasParameters,
    pub x: ReducedState,
    /// m⁻³
    pub number_density: f64,
    /// J/m³
    pub energy_density: f64,
    /// m/s
    pub mean_speed: f64,
    /// W/m²
    pub radiance: f64,
    /// W/m²
    pub radiance_naive: f64,
    pub reduced: ReducedFunctions,
}

impl RadiometryReport {
    pub fn evaluate(params: GasParameters, cfg: &NumericsConfig) -> Result<Self> {
        let x = units::reduce(&params);
        let reduced = ReducedFunctions::evaluate(x, cfg)?;
        let mean_speed = if params.is_massless() {
            C
        } else {
            C * reduced.v_hat.value
        };
        Ok(RadiometryReport {
            params,
            x,
            number_density: number_scale(&params) * reduced.n_hat.value,
            energy_density: energy_scale(&params) * reduced.u_hat.value,
            mean_speed,
            radiance: radiance_scale(&params) * reduced.r_hat.value,
            radiance_naive: radiance_scale(&params) * reduced.r_hat_naive(),
            reduced,
        })
    }

    /// `n=...;u=...;v=...;R=...` method tags.
    pub fn method_flags(&self) -> String {
        format!(
            "n={};u={};v={};R={}",
            self.reduced.n_hat.method,
            self.reduced.u_hat.method,
            self.reduced.v_hat.method,
            self.reduced.r_hat.method
        )
    }
}
