//! Physical constants, mass parsing and the reduction of `(m, T)` to the
//! single dimensionless parameter `x = mc²/kT`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Speed of light in vacuum (m/s), exact.
pub const C: f64 = 299_792_458.0;
/// Reduced Planck constant (J s).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Boltzmann constant (J/K), exact.
pub const K_B: f64 = 1.380_649e-23;
/// Electron-volt (J), exact.
pub const EV: f64 = 1.602_176_634e-19;

/// Mass equivalent of one eV (kg), i.e. `eV/c²`.
pub const EV_MASS: f64 = EV / (C * C);

/// The 2019 SI defining constants used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    c: f64,
    hbar: f64,
    k_b: f64,
    ev: f64,
}

impl PhysicalConstants {
    pub const SI: PhysicalConstants = PhysicalConstants {
        c: C,
        hbar: HBAR,
        k_b: K_B,
        ev: EV,
    };

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn k_b(&self) -> f64 {
        self.k_b
    }

    pub fn ev(&self) -> f64 {
        self.ev
    }

    /// Planck constant `h = 2πħ`.
    pub fn h(&self) -> f64 {
        2.0 * std::f64::consts::PI * self.hbar
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::SI
    }
}

/// Physical input of every evaluation: photon mass, temperature and the
/// number of thermalized polarization states.
///
/// The degeneracy defaults to 2. Every extensive quantity scales as `g/2`;
/// the mean speed does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasParameters {
    mass: f64,
    temperature: f64,
    degeneracy: f64,
}

impl GasParameters {
    pub const DEFAULT_DEGENERACY: f64 = 2.0;

    pub fn new(mass: f64, temperature: f64) -> Result<Self> {
        Self::with_degeneracy(mass, temperature, Self::DEFAULT_DEGENERACY)
    }

    pub fn with_degeneracy(mass: f64, temperature: f64, degeneracy: f64) -> Result<Self> {
        if !(mass.is_finite() && mass >= 0.0) {
            return Err(Error::Domain {
                what: "photon mass",
                value: mass,
                expected: "finite and >= 0 kg",
            });
        }
        if !(temperature.is_finite() && temperature > 0.0) {
            return Err(Error::Domain {
                what: "temperature",
                value: temperature,
                expected: "finite and > 0 K",
            });
        }
        if !(degeneracy.is_finite() && degeneracy > 0.0) {
            return Err(Error::Domain {
                what: "degeneracy",
                value: degeneracy,
                expected: "finite and > 0",
            });
        }
        Ok(GasParameters {
            mass,
            temperature,
            degeneracy,
        })
    }

    /// Parameters at temperature `temperature` whose mass is chosen so that
    /// `mc²/kT = x`.
    pub fn from_reduced(x: f64, temperature: f64, degeneracy: f64) -> Result<Self> {
        if !(x.is_finite() && x >= 0.0) {
            return Err(Error::Domain {
                what: "reduced mass x",
                value: x,
                expected: "finite and >= 0",
            });
        }
        Self::with_degeneracy(x * K_B * temperature / (C * C), temperature, degeneracy)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn degeneracy(&self) -> f64 {
        self.degeneracy
    }

    /// Thermal energy `kT` in joules.
    pub fn thermal_energy(&self) -> f64 {
        K_B * self.temperature
    }

    /// Rest energy `mc²` in joules.
    pub fn rest_energy(&self) -> f64 {
        self.mass * C * C
    }

    /// `g/2`, the factor relative to the two-polarization expressions.
    pub fn degeneracy_factor(&self) -> f64 {
        self.degeneracy / 2.0
    }

    pub fn is_massless(&self) -> bool {
        self.mass == 0.0
    }
}

/// The reduced mass `x = mc²/kT`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ReducedState(f64);

impl ReducedState {
    pub fn new(x: f64) -> Result<Self> {
        if x.is_finite() && x >= 0.0 {
            Ok(ReducedState(x))
        } else {
            Err(Error::Domain {
                what: "reduced mass x",
                value: x,
                expected: "finite and >= 0",
            })
        }
    }

    pub fn x(self) -> f64 {
        self.0
    }
}

pub fn reduce(params: &GasParameters) -> ReducedState {
    ReducedState(params.mass * C * C / (K_B * params.temperature))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MassUnit {
    Kilogram,
    Gram,
    /// `eV/c²`
    ElectronVolt,
    MilliElectronVolt,
    KiloElectronVolt,
}

impl MassUnit {
    pub const ALL: [MassUnit; 5] = [
        MassUnit::Kilogram,
        MassUnit::Gram,
        MassUnit::ElectronVolt,
        MassUnit::MilliElectronVolt,
        MassUnit::KiloElectronVolt,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            MassUnit::Kilogram => "kg",
            MassUnit::Gram => "g",
            MassUnit::ElectronVolt => "eV",
            MassUnit::MilliElectronVolt => "meV",
            MassUnit::KiloElectronVolt => "keV",
        }
    }

    pub fn to_kg(self, value: f64) -> f64 {
        match self {
            MassUnit::Kilogram => value,
            MassUnit::Gram => value / 1e3,
            MassUnit::ElectronVolt => value * EV_MASS,
            MassUnit::MilliElectronVolt => value * EV_MASS / 1e3,
            MassUnit::KiloElectronVolt => value * EV_MASS * 1e3,
        }
    }

    pub fn from_kg(self, kg: f64) -> f64 {
        match self {
            MassUnit::Kilogram => kg,
            MassUnit::Gram => kg * 1e3,
            MassUnit::ElectronVolt => kg / EV_MASS,
            MassUnit::MilliElectronVolt => kg * 1e3 / EV_MASS,
            MassUnit::KiloElectronVolt => kg / 1e3 / EV_MASS,
        }
    }
}

impl fmt::Display for MassUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for MassUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MassUnit::ALL
            .into_iter()
            .find(|u| u.symbol() == s)
            .ok_or_else(|| Error::Parse {
                token: s.to_owned(),
                reason: "unknown mass unit (expected kg, g, eV, meV or keV)",
            })
    }
}

/// Parses `"<number><unit>"`, e.g. `"1eV"`, `"2.5g"`, `"0kg"`. The eV family
/// denotes `eV/c²`.
pub fn parse_mass(text: &str) -> Result<f64> {
    let text = text.trim();
    // longest symbols first so "meV" is not read as "m" + "eV"
    let unit = ["keV", "meV", "eV", "kg", "g"]
        .into_iter()
        .find(|sym| text.ends_with(sym))
        .ok_or_else(|| {
            let tail = text.trim_start_matches(|c: char| !c.is_ascii_alphabetic());
            Error::Parse {
                token: if tail.is_empty() { text } else { tail }.to_owned(),
                reason: "missing or unknown mass unit (expected kg, g, eV, meV or keV)",
            }
        })?;
    let number = &text[..text.len() - unit.len()];
    let unit: MassUnit = unit.parse()?;
    let value: f64 = number.trim().parse().map_err(|_| Error::Parse {
        token: number.to_owned(),
        reason: "malformed number",
    })?;
    if !value.is_finite() {
        return Err(Error::Parse {
            token: number.to_owned(),
            reason: "mass must be finite",
        });
    }
    if value < 0.0 {
        return Err(Error::Parse {
            token: number.to_owned(),
            reason: "mass must be non-negative",
        });
    }
    Ok(unit.to_kg(value))
}

/// Renders a mass in the given unit so that [`parse_mass`] reads it back.
pub fn format_mass(kg: f64, unit: MassUnit) -> String {
    format!("{:e}{}", unit.from_kg(kg), unit.symbol())
}
