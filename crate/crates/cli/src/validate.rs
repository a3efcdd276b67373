//! Closed forms against quadrature on a fixed grid.

use std::fmt::Write;

use photon_gas::thermo::{self, ReducedValues};
use photon_gas::NumericsConfig;

use crate::CliError;

pub const GRID: [f64; 9] = [0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0];
pub const THRESHOLD: f64 = 1e-7;
const NAMES: [&str; 4] = ["n_hat", "v_hat", "u_hat", "R_hat"];

#[derive(Debug, Clone)]
pub struct ValidationReport {
    /// Per grid point, relative residuals in `NAMES` order.
    pub residuals: Vec<(f64, [f64; 4])>,
    /// `R̂/R̂_low-T` at the largest grid point, with the `4/x` allowance.
    pub asymptote: (f64, f64, f64),
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn residuals(s: &ReducedValues, q: &ReducedValues) -> [f64; 4] {
    [
        rel(s.n_hat, q.n_hat),
        rel(s.v_hat, q.v_hat),
        rel(s.u_hat, q.u_hat),
        rel(s.r_hat, q.r_hat),
    ]
}

pub fn run_validation(cfg: &NumericsConfig) -> Result<ValidationReport, CliError> {
    let mut out = Vec::with_capacity(GRID.len());
    for &x in &GRID {
        let s = thermo::series_reduced(x, &cfg.series)?;
        let q = thermo::quadrature_reduced(x, &cfg.quadrature)?;
        out.push((x, residuals(&s, &q)));
    }
    let x = GRID[GRID.len() - 1];
    let r = thermo::series_reduced(x, &cfg.series)?.r_hat;
    let ratio = r / thermo::low_temp_r_hat(x);
    Ok(ValidationReport {
        residuals: out,
        asymptote: (x, ratio, 4.0 / x),
    })
}

impl ValidationReport {
    pub fn max_residuals(&self) -> [f64; 4] {
        let mut m = [0.0f64; 4];
        for (_, r) in &self.residuals {
            for (a, b) in m.iter_mut().zip(r) {
                *a = a.max(*b);
            }
        }
        m
    }

    pub fn passed(&self) -> bool {
        self.max_residuals().iter().all(|&r| r <= THRESHOLD)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:>8} {:>12} {:>12} {:>12} {:>12}",
            "x", NAMES[0], NAMES[1], NAMES[2], NAMES[3]
        );
        for (x, r) in &self.residuals {
            let _ = writeln!(
                s,
                "{x:>8} {:>12.3e} {:>12.3e} {:>12.3e} {:>12.3e}",
                r[0], r[1], r[2], r[3]
            );
        }
        let m = self.max_residuals();
        let _ = writeln!(s, "\nmax relative residual (threshold {THRESHOLD:e})");
        for (name, v) in NAMES.iter().zip(m) {
            let verdict = if v <= THRESHOLD { "ok" } else { "FAIL" };
            let _ = writeln!(s, "  {name:<6} {v:.3e}  {verdict}");
        }
        let (x, ratio, bound) = self.asymptote;
        let _ = writeln!(
            s,
            "\nx = {x}: R_hat / (x² e^-x / 2π²) = {ratio:.6}  (|ratio - 1| = {:.4}, bound 4/x = {bound:.4})",
            (ratio - 1.0).abs()
        );
        let _ = writeln!(s, "{}", if self.passed() { "PASSED" } else { "FAILED" });
        s
    }
}
