//! Special functions needed by the closed forms: modified Bessel functions
//! of the second kind (orders 0, 1, 2), polylogarithms `Li_s` for
//! `s = 1..=4` on `[0, 1]`, `ζ(2)`, `ζ(3)`, `ζ(4)`, and the Bessel sums that
//! appear in the number and energy densities.
//!
//! Several routines come in an exponentially scaled form (`f(x)·eˣ`) so
//! that ratios of tiny quantities stay finite at large `x`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Above this argument `K₂` underflows below 1e-300 and is returned as 0.
pub const BESSEL_UNDERFLOW: f64 = 700.0;

/// Crossover between the power series and the continued fraction.
const BESSEL_SERIES_MAX: f64 = 2.0;

/// Below this `μ = -ln z` the polylogarithm is expanded in powers of `μ`.
const POLYLOG_LOG_SERIES_MAX: f64 = 1.0;

/// Truncation control for the infinite Bessel sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTolerance {
    rel_tol: f64,
    max_terms: usize,
}

impl SeriesTolerance {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1e-3) {
            return Err(Error::Config(format!(
                "series rel_tol must lie in (0, 1e-3), got {rel_tol}"
            )));
        }
        if max_terms < 100 {
            return Err(Error::Config(format!(
                "series max_terms must be >= 100, got {max_terms}"
            )));
        }
        Ok(SeriesTolerance { rel_tol, max_terms })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for SeriesTolerance {
    fn default() -> Self {
        SeriesTolerance {
            rel_tol: 1e-12,
            max_terms: 100_000,
        }
    }
}

/// Result of a truncated Bessel sum over `n ≥ 1`.
///
/// The sum is stored multiplied by `eˣ` so it survives at large `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub scaled: f64,
    pub x: f64,
    pub terms: usize,
}

impl SeriesSum {
    pub fn value(&self) -> f64 {
        self.scaled * (-self.x).exp()
    }
}

fn check_bessel_arg(what: &'static str, z: f64) -> Result<()> {
    if z.is_finite() && z > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            value: z,
            expected: "finite and > 0",
        })
    }
}

/// Modified Bessel function of the second kind `K₂(z)`.
pub fn bessel_k2(z: f64) -> Result<f64> {
    check_bessel_arg("bessel_k2", z)?;
    if z > BESSEL_UNDERFLOW {
        return Ok(0.0);
    }
    Ok(k2_scaled(z) * (-z).exp())
}

/// `K₂(z)·eᶻ`.
pub fn bessel_k2_scaled(z: f64) -> Result<f64> {
    check_bessel_arg("bessel_k2_scaled", z)?;
    Ok(k2_scaled(z))
}

#[cfg(test)]
fn k0_scaled(z: f64) -> f64 {
    if z <= BESSEL_SERIES_MAX {
        k01_series(z).0 * z.exp()
    } else {
        steed_cf2(0.0, z).0
    }
}

pub(crate) fn k1_scaled(z: f64) -> f64 {
    if z <= BESSEL_SERIES_MAX {
        k01_series(z).1 * z.exp()
    } else {
        steed_cf2(0.0, z).1
    }
}

pub(crate) fn k2_scaled(z: f64) -> f64 {
    if z <= BESSEL_SERIES_MAX {
        k2_series(z) * z.exp()
    } else {
        steed_cf2(2.0, z).0
    }
}

// Ascending series for K0 and K1 around the logarithmic singularity,
// z <= 2. With t = z²/4:
//   K0 = -(ln(z/2) + γ) I0 + Σ H_k t^k / (k!)²
//   K1 = 1/z + ln(z/2) I1 - (z/4) Σ (ψ(k+1) + ψ(k+2)) t^k / (k!(k+1)!)
fn k01_series(z: f64) -> (f64, f64) {
    let t = 0.25 * z * z;
    let ln_half = (0.5 * z).ln();

    let mut i0 = 0.0;
    let mut k0_tail = 0.0;
    let mut i1_sum = 0.0;
    let mut k1_tail = 0.0;

    // c0 = t^k/(k!)², c1 = t^k/(k!(k+1)!)
    let mut c0 = 1.0;
    let mut c1 = 1.0;
    let mut harmonic = 0.0;
    for k in 0..60 {
        if k > 0 {
            let kf = k as f64;
            c0 *= t / (kf * kf);
            c1 *= t / (kf * (kf + 1.0));
            harmonic += 1.0 / kf;
        }
        let psi_k1 = -EULER_GAMMA + harmonic;
        let psi_k2 = psi_k1 + 1.0 / (k as f64 + 1.0);
        i0 += c0;
        k0_tail += harmonic * c0;
        i1_sum += c1;
        k1_tail += (psi_k1 + psi_k2) * c1;
        if c0 < 1e-18 * i0 && c1 < 1e-18 * i1_sum {
            break;
        }
    }
    let i1 = 0.5 * z * i1_sum;
    let k0 = -(ln_half + EULER_GAMMA) * i0 + k0_tail;
    let k1 = 1.0 / z + ln_half * i1 - 0.25 * z * k1_tail;
    (k0, k1)
}

// K2 = 2/z² - 1/2 - ln(z/2) I2 + (z²/8) Σ (ψ(k+1) + ψ(k+3)) t^k / (k!(k+2)!)
fn k2_series(z: f64) -> f64 {
    let t = 0.25 * z * z;
    let ln_half = (0.5 * z).ln();

    let mut c = 0.5; // t^k/(k!(k+2)!)
    let mut harmonic = 0.0;
    let mut i2_sum = 0.0;
    let mut tail = 0.0;
    for k in 0..60 {
        let kf = k as f64;
        if k > 0 {
            c *= t / (kf * (kf + 2.0));
            harmonic += 1.0 / kf;
        }
        let psi_k1 = -EULER_GAMMA + harmonic;
        let psi_k3 = psi_k1 + 1.0 / (kf + 1.0) + 1.0 / (kf + 2.0);
        i2_sum += c;
        tail += (psi_k1 + psi_k3) * c;
        if c < 1e-18 * i2_sum {
            break;
        }
    }
    let i2 = t * i2_sum;
    2.0 / (z * z) - 0.5 - ln_half * i2 + 0.5 * t * tail
}

// Steed's evaluation of the continued fraction for K_{ν+1}/K_ν together
// with the normalizing sum (Temme), convergent for z >= 2. Returns the
// exponentially scaled (K_ν, K_{ν+1}).
fn steed_cf2(nu: f64, z: f64) -> (f64, f64) {
    const MAX_ITER: usize = 10_000;
    let mut b = 2.0 * (1.0 + z);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - nu * nu;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    h *= a1;
    let k_nu = (PI / (2.0 * z)).sqrt() / s;
    let k_next = k_nu * (nu + z + 0.5 - h) / z;
    (k_nu, k_next)
}

/// Riemann zeta at `s ∈ {2, 3, 4}`.
pub fn zeta_value(s: u32) -> Result<f64> {
    match s {
        2 => Ok(PI * PI / 6.0),
        3 => Ok(zeta3()),
        4 => Ok(PI.powi(4) / 90.0),
        _ => Err(Error::Domain {
            what: "zeta_value",
            value: s as f64,
            expected: "s in {2, 3, 4}",
        }),
    }
}

// Σ_{n≤N} n⁻³ plus the Euler–Maclaurin tail
//   1/(2N²) - 1/(2N³) + 1/(4N⁴) - 1/(12N⁶) + 1/(12N⁸)
fn zeta3() -> f64 {
    const N: u32 = 100;
    let head: f64 = (1..=N).rev().map(|n| (n as f64).powi(-3)).sum();
    let n = N as f64;
    let tail = 1.0 / (2.0 * n * n) - 1.0 / (2.0 * n.powi(3)) + 1.0 / (4.0 * n.powi(4))
        - 1.0 / (12.0 * n.powi(6))
        + 1.0 / (12.0 * n.powi(8));
    head + tail
}

// ζ at non-positive integers and at 2..=4; ζ(1) is never requested.
fn zeta_integer(s: i32) -> f64 {
    // B_2, B_4, ..., B_30
    const BERNOULLI_EVEN: [f64; 15] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
        854513.0 / 138.0,
        -236364091.0 / 2730.0,
        8553103.0 / 6.0,
        -23749461029.0 / 870.0,
        8615841276005.0 / 14322.0,
    ];
    match s {
        2..=4 => zeta_value(s as u32).unwrap_or(f64::NAN),
        0 => -0.5,
        s if s < 0 => {
            let j = (-s) as usize;
            if j.is_multiple_of(2) {
                0.0
            } else {
                // ζ(-j) = -B_{j+1}/(j+1)
                BERNOULLI_EVEN
                    .get((j - 1) / 2)
                    .map_or(0.0, |b| -b / (j as f64 + 1.0))
            }
        }
        _ => f64::NAN,
    }
}

/// Polylogarithm `Li_s(z) = Σ zⁿ/nˢ` for `s ∈ {1, 2, 3, 4}` and `z ∈ [0, 1]`.
pub fn polylog(s: u32, z: f64) -> Result<f64> {
    if !(1..=4).contains(&s) {
        return Err(Error::Domain {
            what: "polylog order",
            value: s as f64,
            expected: "s in {1, 2, 3, 4}",
        });
    }
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::Domain {
            what: "polylog",
            value: z,
            expected: "0 <= z <= 1",
        });
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    if z == 1.0 {
        return if s == 1 {
            Err(Error::Divergent { what: "Li_1(1)" })
        } else {
            zeta_value(s)
        };
    }
    Ok(polylog_exp(s, -z.ln()))
}

/// `Li_s(e^{-μ})` for `μ > 0`, avoiding the rounding of `e^{-μ}` near 1.
pub fn polylog_exp(s: u32, mu: f64) -> f64 {
    polylog_exp_scaled(s, mu) * (-mu).exp()
}

/// `e^{μ}·Li_s(e^{-μ})`, which tends to 1 as `μ → ∞`.
pub fn polylog_exp_scaled(s: u32, mu: f64) -> f64 {
    debug_assert!((1..=4).contains(&s) && mu > 0.0);
    if mu < POLYLOG_LOG_SERIES_MAX {
        let value = if s == 1 {
            -(-(-mu).exp_m1()).ln()
        } else {
            polylog_log_series(s, mu)
        };
        return value * mu.exp();
    }
    // Direct series, geometric tail bound term·q/(1-q) with q = e^{-μ}.
    let q = (-mu).exp();
    let tail_factor = q / (1.0 - q);
    let mut sum = 0.0;
    let mut weight = 1.0; // e^{-(n-1)μ}
    for n in 1..200 {
        let term = weight / (n as f64).powi(s as i32);
        sum += term;
        if term * tail_factor < 1e-17 * sum {
            break;
        }
        weight *= q;
    }
    sum
}

// Li_s(e^{-μ}) = (-μ)^{s-1}/(s-1)! (H_{s-1} - ln μ) + Σ_{k≠s-1} ζ(s-k) (-μ)^k / k!
// valid for μ < 2π.
fn polylog_log_series(s: u32, mu: f64) -> f64 {
    let s = s as i32;
    let mut sum = 0.0;
    let mut power = 1.0; // (-μ)^k / k!
    let mut small_run = 0;
    for k in 0..60 {
        if k > 0 {
            power *= -mu / k as f64;
        }
        let term = if k == s - 1 {
            let harmonic: f64 = (1..s).map(|j| 1.0 / j as f64).sum();
            power * (harmonic - mu.ln())
        } else {
            power * zeta_integer(s - k)
        };
        sum += term;
        if k > s && term.abs() < 1e-17 * sum.abs() {
            small_run += 1;
            if small_run >= 2 {
                break;
            }
        } else if term != 0.0 {
            small_run = 0;
        }
    }
    sum
}

/// `Σ_{n≥1} n⁻¹ K₂(n x)`, the Bessel sum of the number density.
///
/// Terms obey `tₙ₊ⱼ ≤ tₙ e^{-jx}` because `K₂(z)eᶻ` decreases, which gives a
/// geometric bound on the discarded tail.
pub fn k2_weighted_sum(x: f64, tol: &SeriesTolerance) -> Result<SeriesSum> {
    bessel_sum("k2_weighted_sum", x, tol, |n, z| k2_scaled(z) / n)
}

/// `Σ_{n≥1} [K₁(nx)/(nx) + 3K₂(nx)/(nx)²]`, the Bessel sum of the energy
/// density, `û = x⁴/π² · Σ`.
pub fn k_energy_sum(x: f64, tol: &SeriesTolerance) -> Result<SeriesSum> {
    bessel_sum("k_energy_sum", x, tol, |_, z| {
        k1_scaled(z) / z + 3.0 * k2_scaled(z) / (z * z)
    })
}

// Sums term(n, nx)·e^{-(n-1)x}, where term is eᶻ-scaled and e^{nx}·decay
// is non-increasing in n.
fn bessel_sum(
    what: &'static str,
    x: f64,
    tol: &SeriesTolerance,
    term: impl Fn(f64, f64) -> f64,
) -> Result<SeriesSum> {
    check_bessel_arg(what, x)?;
    let q = (-x).exp();
    let tail_factor = q / (1.0 - q);
    let mut sum = 0.0;
    let mut weight = 1.0;
    let mut last = 0.0;
    for n in 1..=tol.max_terms {
        let nf = n as f64;
        let t = term(nf, nf * x) * weight;
        last = t;
        sum += t;
        let limit = tol.rel_tol * sum;
        if t < limit && t * tail_factor < limit {
            return Ok(SeriesSum {
                scaled: sum,
                x,
                terms: n,
            });
        }
        weight *= q;
    }
    Err(Error::NoConvergence {
        what,
        estimate: sum * q,
        error: last * tail_factor * q,
        work: tol.max_terms,
    })
}
