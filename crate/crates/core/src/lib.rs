//! Thermodynamics and radiometry of a Bose gas of massive photons.
//!
//! Every quantity is computed in reduced, dimensionless form as a function
//! of `x = mc²/kT` and converted to SI once at the boundary. Closed forms
//! built from Bessel sums and polylogarithms are paired with independent
//! quadratures of the defining phase-space integrals ([`oracle`]).
//!
//! ```
//! use photon_gas::units::parse_mass;
//! use photon_gas::{GasParameters, NumericsConfig, RadiometryReport};
//!
//! let params = GasParameters::new(parse_mass("1meV")?, 10.0)?;
//! let report = RadiometryReport::evaluate(params, &NumericsConfig::default())?;
//! assert!(report.radiance < report.radiance_naive);
//! # Ok::<(), photon_gas::Error>(())
//! ```

pub mod error;
pub mod oracle;
pub mod specfun;
pub mod thermo;
pub mod units;

pub use error::{Error, Result};
pub use oracle::{Domain, Estimate, QuadratureConfig};
pub use specfun::{SeriesSum, SeriesTolerance};
pub use thermo::{Method, NumericsConfig, RadiometryReport, ReducedFunctions, ReducedValues};
pub use units::{GasParameters, MassUnit, PhysicalConstants, ReducedState};
