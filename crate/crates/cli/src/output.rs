use std::fmt::Write;

use photon_gas::units::{parse_mass, GasParameters};
use photon_gas::{NumericsConfig, RadiometryReport};

use crate::args::Format;
use crate::CliError;

/// Column names shared by `point --format csv` and `sweep`.
pub const COLUMNS: [&str; 9] = [
    "index",
    "T_K",
    "x",
    "n_per_m3",
    "u_J_per_m3",
    "vbar_m_per_s",
    "R_W_per_m2",
    "R_naive_W_per_m2",
    "method_flags",
];

/// 17 significant digits in scientific notation; round-trips every f64.
pub fn fmt_num(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn point_report(
    mass: &str,
    temperature: f64,
    g: f64,
    cfg: &NumericsConfig,
) -> Result<RadiometryReport, CliError> {
    let mass = parse_mass(mass)?;
    let params = GasParameters::with_degeneracy(mass, temperature, g)?;
    Ok(RadiometryReport::evaluate(params, cfg)?)
}

pub fn csv_header() -> String {
    COLUMNS.join(",")
}

pub fn csv_row(index: usize, r: &RadiometryReport) -> String {
    format!(
        "{index},{},{},{},{},{},{},{},{}",
        fmt_num(r.params.temperature()),
        fmt_num(r.x.x()),
        fmt_num(r.number_density),
        fmt_num(r.energy_density),
        fmt_num(r.mean_speed),
        fmt_num(r.radiance),
        fmt_num(r.radiance_naive),
        r.method_flags()
    )
}

pub fn render_point(r: &RadiometryReport, format: Format) -> String {
    match format {
        Format::Csv => format!("{}\n{}\n", csv_header(), csv_row(0, r)),
        Format::Json => render_json(r),
        Format::Text => render_text(r),
    }
}

fn render_json(r: &RadiometryReport) -> String {
    let fields = [
        ("mass_kg", fmt_num(r.params.mass())),
        ("g", fmt_num(r.params.degeneracy())),
        ("T_K", fmt_num(r.params.temperature())),
        ("x", fmt_num(r.x.x())),
        ("n_per_m3", fmt_num(r.number_density)),
        ("u_J_per_m3", fmt_num(r.energy_density)),
        ("vbar_m_per_s", fmt_num(r.mean_speed)),
        ("R_W_per_m2", fmt_num(r.radiance)),
        ("R_naive_W_per_m2", fmt_num(r.radiance_naive)),
    ];
    let mut out = String::from("{\n");
    for (key, value) in fields {
        let _ = writeln!(out, "  \"{key}\": {value},");
    }
    let m = &r.reduced;
    let _ = writeln!(
        out,
        "  \"methods\": {{\"n\": \"{}\", \"u\": \"{}\", \"v\": \"{}\", \"R\": \"{}\"}}",
        m.n_hat.method, m.u_hat.method, m.v_hat.method, m.r_hat.method
    );
    out.push_str("}\n");
    out
}

fn render_text(r: &RadiometryReport) -> String {
    let m = &r.reduced;
    let mut out = String::new();
    let mut line = |label: &str, value: f64, unit: &str, tag: &str| {
        let _ = writeln!(out, "{label:<10} {:>24} {unit:<8} {tag}", fmt_num(value));
    };
    line("mass", r.params.mass(), "kg", "");
    line("T", r.params.temperature(), "K", "");
    line("g", r.params.degeneracy(), "", "");
    line("x", r.x.x(), "", "mc²/kT");
    line("N/V", r.number_density, "m^-3", m.n_hat.method.as_str());
    line("U/V", r.energy_density, "J/m^3", m.u_hat.method.as_str());
    line("vbar", r.mean_speed, "m/s", m.v_hat.method.as_str());
    line("R", r.radiance, "W/m^2", m.r_hat.method.as_str());
    line("R_naive", r.radiance_naive, "W/m^2", "(c/4)·U/V");
    out
}
