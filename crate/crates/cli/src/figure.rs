//! The mean speed against temperature, as CSV and as a standalone SVG.

use std::f64::consts::PI;
use std::fmt::Write;

use photon_gas::thermo;
use photon_gas::units::ReducedState;
use photon_gas::NumericsConfig;
use rayon::prelude::*;

use crate::output::fmt_num;
use crate::sweep::{SweepSpec, Variable};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureRow {
    pub x: f64,
    pub kt_over_mc2: f64,
    pub vbar_over_c: f64,
    /// `√(8/πx)`, absent where it would exceed 1.
    pub nonrel_approx: Option<f64>,
}

/// Nonrelativistic `v̄/c`; `None` below `x = 8/π`.
pub fn nonrel_approx(x: f64) -> Option<f64> {
    if x < 8.0 / PI {
        None
    } else {
        Some((8.0 / (PI * x)).sqrt().min(1.0))
    }
}

pub fn mean_speed_rows(spec: &SweepSpec, cfg: &NumericsConfig) -> Result<Vec<FigureRow>, CliError> {
    if spec.variable != Variable::X {
        return Err(CliError::Usage("the mean-speed figure sweeps x".into()));
    }
    spec.grid()
        .into_par_iter()
        .map(|x| {
            let v = thermo::reduced_mean_speed(ReducedState::new(x)?, cfg)?;
            Ok(FigureRow {
                x,
                kt_over_mc2: 1.0 / x,
                vbar_over_c: v.value,
                nonrel_approx: nonrel_approx(x),
            })
        })
        .collect()
}

pub fn render_csv(rows: &[FigureRow]) -> String {
    let mut out = String::from("x,kT_over_mc2,vbar_over_c,nonrel_approx\n");
    for r in rows {
        let approx = r.nonrel_approx.map(fmt_num).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{}",
            fmt_num(r.x),
            fmt_num(r.kt_over_mc2),
            fmt_num(r.vbar_over_c),
            approx
        );
    }
    out
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;

struct Frame {
    log_lo: f64,
    log_hi: f64,
}

impl Frame {
    fn px(&self, t: f64) -> f64 {
        let f = (t.log10() - self.log_lo) / (self.log_hi - self.log_lo);
        LEFT + f * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, v: f64) -> f64 {
        let f = v.clamp(0.0, 1.05) / 1.05;
        HEIGHT - BOTTOM - f * (HEIGHT - TOP - BOTTOM)
    }
}

fn polyline(points: impl Iterator<Item = (f64, f64)>) -> String {
    let mut s = String::new();
    for (i, (x, y)) in points.enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{x:.2},{y:.2}");
    }
    s
}

/// v̄/c against kT/mc² on a log abscissa, with the nonrelativistic
/// asymptote dashed.
pub fn render_svg(rows: &[FigureRow]) -> String {
    let (lo, hi) = rows
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r.kt_over_mc2), hi.max(r.kt_over_mc2))
        });
    let frame = Frame {
        log_lo: lo.log10().floor(),
        log_hi: hi.log10().ceil().max(lo.log10().floor() + 1.0),
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="13">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );

    let (x0, x1) = (LEFT, WIDTH - RIGHT);
    let (y0, y1) = (HEIGHT - BOTTOM, TOP);
    let _ = writeln!(
        s,
        r#"<path d="M{x0},{y1} L{x0},{y0} L{x1},{y0}" fill="none" stroke="black"/>"#
    );

    let mut decade = frame.log_lo as i32;
    while decade as f64 <= frame.log_hi {
        let x = frame.px(10f64.powi(decade));
        let _ = writeln!(
            s,
            r#"<line x1="{x:.2}" y1="{y0}" x2="{x:.2}" y2="{}" stroke="black"/><text x="{x:.2}" y="{}" text-anchor="middle">1e{decade}</text>"#,
            y0 + 6.0,
            y0 + 22.0
        );
        decade += 1;
    }
    for tick in [0.0, 0.2, 0.4, 0.6, 0.8, 1.0] {
        let y = frame.py(tick);
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{y:.2}" x2="{x0}" y2="{y:.2}" stroke="black"/><text x="{}" y="{:.2}" text-anchor="end">{tick:.1}</text>"#,
            x0 - 6.0,
            x0 - 10.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">kT / mc²</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{}" text-anchor="middle" transform="rotate(-90 20 {})">v̄ / c</text>"#,
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    );

    let curve = polyline(
        rows.iter()
            .map(|r| (frame.px(r.kt_over_mc2), frame.py(r.vbar_over_c))),
    );
    let _ = writeln!(
        s,
        r#"<polyline points="{curve}" fill="none" stroke="navy" stroke-width="2"/>"#
    );
    let asymptote = polyline(rows.iter().filter_map(|r| {
        r.nonrel_approx
            .map(|a| (frame.px(r.kt_over_mc2), frame.py(a)))
    }));
    if !asymptote.is_empty() {
        let _ = writeln!(
            s,
            r#"<polyline points="{asymptote}" fill="none" stroke="firebrick" stroke-width="1.5" stroke-dasharray="6 4"/>"#
        );
    }
    s.push_str("</svg>\n");
    s
}
