use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Thermodynamics and radiometry of a photon gas with nonzero rest mass.
///
/// Masses are written as <number><unit> with unit one of kg, g, eV, meV,
/// keV; the eV family means eV/c².
#[derive(Debug, Parser)]
#[command(name = "photon-gas", version)]
pub struct Cli {
    #[command(flatten)]
    pub numerics: NumericsArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct NumericsArgs {
    /// Relative truncation tolerance of the Bessel series
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub series_tol: f64,

    /// Relative tolerance of the quadrature path
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub quad_tol: f64,

    /// Below this x = mc²/kT the series are replaced by quadrature
    #[arg(long, global = true, default_value_t = 0.1)]
    pub x_switch: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every quantity at one (mass, temperature)
    Point(PointArgs),
    /// Tabulate every quantity over a temperature or x grid as CSV
    Sweep(SweepArgs),
    /// Reproduce figures
    #[command(subcommand)]
    Figure(FigureCommand),
    /// Compare closed forms against quadrature on a fixed x grid
    Validate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Photon mass, e.g. 0kg or 1meV
    #[arg(long)]
    pub mass: String,

    /// Temperature in kelvin
    #[arg(long)]
    pub temp: f64,

    /// Polarization degeneracy (2 keeps the usual photon counting)
    #[arg(long, default_value_t = 2.0)]
    pub g: f64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariableArg {
    Temperature,
    X,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    Linear,
    Log,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Photon mass, e.g. 1meV (must be > 0 for an x sweep)
    #[arg(long)]
    pub mass: String,

    #[arg(long, value_enum, default_value_t = VariableArg::Temperature)]
    pub variable: VariableArg,

    /// Lowest temperature (K) of a temperature sweep
    #[arg(long)]
    pub t_min: Option<f64>,

    /// Highest temperature (K) of a temperature sweep
    #[arg(long)]
    pub t_max: Option<f64>,

    /// Lowest x of an x sweep
    #[arg(long)]
    pub x_min: Option<f64>,

    /// Highest x of an x sweep
    #[arg(long)]
    pub x_max: Option<f64>,

    #[arg(long, default_value_t = 25)]
    pub points: usize,

    #[arg(long, value_enum, default_value_t = SpacingArg::Log)]
    pub spacing: SpacingArg,

    #[arg(long, default_value_t = 2.0)]
    pub g: f64,

    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum FigureCommand {
    /// Mean speed over c against kT/mc², with the nonrelativistic asymptote
    MeanSpeed(FigureArgs),
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long, default_value_t = 0.01)]
    pub x_min: f64,

    #[arg(long, default_value_t = 100.0)]
    pub x_max: f64,

    #[arg(long, default_value_t = 200)]
    pub points: usize,

    #[arg(long, value_enum, default_value_t = SpacingArg::Log)]
    pub spacing: SpacingArg,

    /// CSV destination (stdout when absent)
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Also write an SVG plot here
    #[arg(long)]
    pub svg: Option<PathBuf>,
}
