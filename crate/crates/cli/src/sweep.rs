use rayon::prelude::*;

use photon_gas::units::{GasParameters, C, K_B};
use photon_gas::{NumericsConfig, RadiometryReport};

use crate::args::{SpacingArg, SweepArgs, VariableArg};
use crate::output::{csv_header, csv_row};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    /// kelvin
    Temperature,
    /// `mc²/kT`
    X,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

impl From<SpacingArg> for Spacing {
    fn from(s: SpacingArg) -> Self {
        match s {
            SpacingArg::Linear => Spacing::Linear,
            SpacingArg::Log => Spacing::Log,
        }
    }
}

/// A one-dimensional evaluation grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub variable: Variable,
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl SweepSpec {
    pub fn new(
        variable: Variable,
        min: f64,
        max: f64,
        points: usize,
        spacing: Spacing,
    ) -> Result<Self, CliError> {
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(CliError::Usage(format!(
                "sweep range must satisfy min < max, got [{min}, {max}]"
            )));
        }
        if min <= 0.0 {
            return Err(CliError::Usage(format!(
                "sweep variable must be positive, got min = {min}"
            )));
        }
        if points < 2 {
            return Err(CliError::Usage(format!(
                "sweep needs at least 2 points, got {points}"
            )));
        }
        Ok(SweepSpec {
            variable,
            min,
            max,
            points,
            spacing,
        })
    }

    pub fn from_args(a: &SweepArgs) -> Result<Self, CliError> {
        let (variable, lo, hi, names) = match a.variable {
            VariableArg::Temperature => {
                (Variable::Temperature, a.t_min, a.t_max, "--t-min/--t-max")
            }
            VariableArg::X => (Variable::X, a.x_min, a.x_max, "--x-min/--x-max"),
        };
        match (lo, hi) {
            (Some(lo), Some(hi)) => Self::new(variable, lo, hi, a.points, a.spacing.into()),
            _ => Err(CliError::Usage(format!("this sweep requires {names}"))),
        }
    }

    /// Grid values with both end points hit exactly.
    pub fn grid(&self) -> Vec<f64> {
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.min;
                }
                if i == last {
                    return self.max;
                }
                let f = i as f64 / last as f64;
                match self.spacing {
                    Spacing::Linear => self.min + (self.max - self.min) * f,
                    Spacing::Log => (self.min.ln() + (self.max.ln() - self.min.ln()) * f).exp(),
                }
            })
            .collect()
    }
}

/// Evaluates the grid in parallel; rows come back in grid order.
pub fn run_sweep(
    spec: &SweepSpec,
    mass: f64,
    g: f64,
    cfg: &NumericsConfig,
) -> Result<Vec<RadiometryReport>, CliError> {
    if spec.variable == Variable::X && mass <= 0.0 {
        return Err(CliError::Usage(
            "an x sweep needs a positive mass (x = mc²/kT fixes T)".into(),
        ));
    }
    spec.grid()
        .into_par_iter()
        .map(|v| {
            let temperature = match spec.variable {
                Variable::Temperature => v,
                Variable::X => mass * C * C / (K_B * v),
            };
            let params = GasParameters::with_degeneracy(mass, temperature, g)?;
            Ok(RadiometryReport::evaluate(params, cfg)?)
        })
        .collect()
}

pub fn render_csv(rows: &[RadiometryReport]) -> String {
    let mut out = csv_header();
    out.push('\n');
    for (i, r) in rows.iter().enumerate() {
        out.push_str(&csv_row(i, r));
        out.push('\n');
    }
    out
}
