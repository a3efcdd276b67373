//! Library side of the `photon-gas` command: argument types, report
//! rendering, sweeps, the mean-speed figure and the validation run.

pub mod args;
pub mod figure;
pub mod output;
pub mod sweep;
pub mod validate;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use photon_gas::{Error, NumericsConfig, QuadratureConfig, SeriesTolerance};
use thiserror::Error as ThisError;

pub use args::Cli;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerics(String),
    #[error("validation failed")]
    Validation,
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Validation => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Numerics(_) => 3,
        })
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_convergence() {
            CliError::Numerics(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub fn numerics_config(args: &args::NumericsArgs) -> Result<NumericsConfig, CliError> {
    let defaults = NumericsConfig::default();
    let series = SeriesTolerance::new(args.series_tol, defaults.series.max_terms())?;
    let quadrature = QuadratureConfig::default().with_rel_tol(args.quad_tol)?;
    let cfg = NumericsConfig {
        series,
        quadrature,
        ..defaults
    }
    .with_x_switch(args.x_switch)?;
    Ok(cfg)
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so a failed run never leaves a truncated file behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| CliError::Io(e.to_string()))?;
    Ok(())
}

fn emit(out: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_atomic(path, contents),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(contents.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = numerics_config(&cli.numerics)?;
    match cli.command {
        args::Command::Point(a) => {
            let report = output::point_report(&a.mass, a.temp, a.g, &cfg)?;
            let text = output::render_point(&report, a.format);
            emit(a.out.as_deref(), &text)
        }
        args::Command::Sweep(a) => {
            let spec = sweep::SweepSpec::from_args(&a)?;
            let mass = photon_gas::units::parse_mass(&a.mass)?;
            let rows = sweep::run_sweep(&spec, mass, a.g, &cfg)?;
            emit(a.out.as_deref(), &sweep::render_csv(&rows))
        }
        args::Command::Figure(args::FigureCommand::MeanSpeed(a)) => {
            let spec = sweep::SweepSpec::new(
                sweep::Variable::X,
                a.x_min,
                a.x_max,
                a.points,
                a.spacing.into(),
            )?;
            let rows = figure::mean_speed_rows(&spec, &cfg)?;
            let csv = figure::render_csv(&rows);
            let svg = a.svg.as_ref().map(|_| figure::render_svg(&rows));
            emit(a.out.as_deref(), &csv)?;
            if let (Some(path), Some(svg)) = (a.svg.as_deref(), svg) {
                write_atomic(path, &svg)?;
            }
            Ok(())
        }
        args::Command::Validate => {
            let report = validate::run_validation(&cfg)?;
            emit(None, &report.render())?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Validation)
            }
        }
    }
}
