//! Brute-force quadrature of the defining phase-space integrals.
//!
//! These routines integrate the Bose–Einstein occupation directly, with no
//! series expansion, so they serve both as the small-`x` evaluation path and
//! as the reference every closed form is checked against.
//!
//! Integration variables:
//!
//! * `s = pc/kT` for the number, mean-speed and energy integrals, with
//!   `ε̂ = √(s² + x²)`. Then `N/V = (kT/ħc)³ · (1/π²) ∫ s² n(ε̂) ds` since
//!   `8π/h³ = 1/(π²ħ³)`.
//! * `s = x sinh t`, `ε̂ = x cosh t` (so `ds = ε̂ dt`) when `x > 30`, where
//!   the integrand lives in a layer of width O(1) above `ε̂ = x`.
//! * `u = ε̂ - x` for the radiance, where `u·v/4` integrated over `ω` becomes
//!   `(1/4π²) ∫ ε̂(ε̂² - x²) n(ε̂) dε̂`.
//!
//! All integrands are evaluated multiplied by `eˣ` and rescaled at the end.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::units::ReducedState;

/// Above this `x` the hyperbolic substitution is used.
const LARGE_X: f64 = 30.0;

/// Hard cap on the number of subintervals per integral.
const MAX_SEGMENTS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    rel_tol: f64,
    max_depth: u32,
    tail_cutoff: f64,
}

impl QuadratureConfig {
    pub fn new(rel_tol: f64, max_depth: u32, tail_cutoff: f64) -> Result<Self> {
        if !(1e-14..=1e-6).contains(&rel_tol) {
            return Err(Error::Config(format!(
                "quadrature rel_tol must lie in [1e-14, 1e-6], got {rel_tol}"
            )));
        }
        if max_depth < 20 {
            return Err(Error::Config(format!(
                "quadrature max_depth must be >= 20, got {max_depth}"
            )));
        }
        if !(tail_cutoff >= 40.0 && tail_cutoff.is_finite()) {
            return Err(Error::Config(format!(
                "quadrature tail_cutoff must be >= 40, got {tail_cutoff}"
            )));
        }
        Ok(QuadratureConfig {
            rel_tol,
            max_depth,
            tail_cutoff,
        })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }

    pub fn tail_cutoff(&self) -> f64 {
        self.tail_cutoff
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Result<Self> {
        Self::new(rel_tol, self.max_depth, self.tail_cutoff)
    }

    pub fn with_tail_cutoff(self, tail_cutoff: f64) -> Result<Self> {
        Self::new(self.rel_tol, self.max_depth, tail_cutoff)
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            max_depth: 50,
            tail_cutoff: 50.0,
        }
    }
}

/// An integral value with its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

impl Estimate {
    fn scale(self, factor: f64) -> Estimate {
        Estimate {
            value: self.value * factor,
            error: self.error * factor.abs(),
        }
    }

    pub fn rel_error(&self) -> f64 {
        if self.value == 0.0 {
            0.0
        } else {
            (self.error / self.value).abs()
        }
    }
}

/// Integration range for [`integrate_adaptive`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite {
        lower: f64,
        upper: f64,
    },
    /// `[lower, ∞)` for an integrand that decays at least like
    /// `exp(-decay_rate·(t - lower))`; truncated where that weight falls
    /// below `exp(-tail_cutoff)`.
    SemiInfinite {
        lower: f64,
        decay_rate: f64,
    },
}

// 15-point Kronrod nodes on [-1, 1] (non-negative half) with the embedded
// 7-point Gauss rule.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_3,
    0.949_107_912_342_758_524_526_189_684_047_9,
    0.864_864_423_359_769_072_789_712_788_640_9,
    0.741_531_185_599_394_439_863_864_773_280_8,
    0.586_087_235_467_691_130_294_144_845_693_0,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_2,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_20,
    0.104_790_010_322_250_183_839_876_322_541_5,
    0.140_653_259_715_525_918_745_189_590_510_2,
    0.169_004_726_639_267_902_826_583_426_598_6,
    0.190_350_578_064_785_409_913_256_402_421_0,
    0.204_432_940_075_298_892_414_161_999_234_6,
    0.209_482_141_084_727_828_012_999_174_891_7,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_1,
    0.279_705_391_489_276_667_901_467_771_423_8,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_3,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lower: f64,
    upper: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, lower: f64, upper: f64, depth: u32) -> Segment {
    let center = 0.5 * (lower + upper);
    let half = 0.5 * (upper - lower);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        // odd Kronrod indices are the Gauss nodes
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Segment {
        lower,
        upper,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
        depth,
    }
}

/// Globally adaptive Gauss–Kronrod (7/15) quadrature with bisection of the
/// worst subinterval. The error estimate is the Kronrod–Gauss difference,
/// which overstates the true error of the Kronrod value for smooth
/// integrands.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    domain: Domain,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    let (lower, upper) = match domain {
        Domain::Finite { lower, upper } => (lower, upper),
        Domain::SemiInfinite { lower, decay_rate } => {
            if !(decay_rate > 0.0 && decay_rate.is_finite()) {
                return Err(Error::Domain {
                    what: "integrate_adaptive decay rate",
                    value: decay_rate,
                    expected: "finite and > 0",
                });
            }
            (lower, lower + cfg.tail_cutoff / decay_rate)
        }
    };
    if !(lower.is_finite() && upper.is_finite()) {
        return Err(Error::Domain {
            what: "integrate_adaptive bounds",
            value: if lower.is_finite() { upper } else { lower },
            expected: "finite",
        });
    }
    if lower == upper {
        return Ok(Estimate {
            value: 0.0,
            error: 0.0,
        });
    }

    const INITIAL: usize = 4;
    let width = (upper - lower) / INITIAL as f64;
    let mut heap = BinaryHeap::with_capacity(256);
    for i in 0..INITIAL {
        let a = lower + width * i as f64;
        let b = if i + 1 == INITIAL { upper } else { a + width };
        heap.push(gauss_kronrod(&f, a, b, 0));
    }

    loop {
        let value: f64 = heap.iter().map(|s| s.value).sum();
        let error: f64 = heap.iter().map(|s| s.error).sum();
        if !value.is_finite() || !error.is_finite() {
            return Err(Error::NoConvergence {
                what: "integrate_adaptive (non-finite integrand)",
                estimate: value,
                error,
                work: heap.len(),
            });
        }
        if error <= cfg.rel_tol * value.abs() {
            return Ok(Estimate { value, error });
        }
        let worst = heap.pop().expect("heap is never empty");
        if worst.depth >= cfg.max_depth || heap.len() + 2 > MAX_SEGMENTS {
            return Err(Error::NoConvergence {
                what: "integrate_adaptive",
                estimate: value,
                error,
                work: heap.len() + 1,
            });
        }
        let mid = 0.5 * (worst.lower + worst.upper);
        heap.push(gauss_kronrod(&f, worst.lower, mid, worst.depth + 1));
        heap.push(gauss_kronrod(&f, mid, worst.upper, worst.depth + 1));
    }
}

// Bose–Einstein occupation 1/(e^ε̂ - 1) multiplied by eˣ, given ε̂ and the
// precomputed excess ε̂ - x.
#[inline]
fn occupation_scaled(energy: f64, excess: f64) -> f64 {
    (-excess).exp() / -(-energy).exp_m1()
}

// eˣ · ∫₀^∞ kernel(s, ε̂) / (e^ε̂ - 1) ds
fn momentum_integral<K: Fn(f64, f64) -> f64>(
    what: &'static str,
    x: f64,
    kernel: K,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    let cutoff = cfg.tail_cutoff;
    let result = if x <= LARGE_X {
        let upper = (cutoff * (2.0 * x + cutoff)).sqrt();
        integrate_adaptive(
            |s| {
                let energy = s.hypot(x);
                let excess = s * s / (energy + x);
                kernel(s, energy) * occupation_scaled(energy, excess)
            },
            Domain::Finite { lower: 0.0, upper },
            cfg,
        )
    } else {
        let upper = (cutoff / x).acosh_1p();
        integrate_adaptive(
            |t| {
                let s = x * t.sinh();
                let energy = x * t.cosh();
                let half = (0.5 * t).sinh();
                let excess = 2.0 * x * half * half;
                kernel(s, energy) * occupation_scaled(energy, excess) * energy
            },
            Domain::Finite { lower: 0.0, upper },
            cfg,
        )
    };
    result.map_err(|e| relabel(e, what))
}

fn relabel(e: Error, what: &'static str) -> Error {
    match e {
        Error::NoConvergence {
            estimate,
            error,
            work,
            ..
        } => Error::NoConvergence {
            what,
            estimate,
            error,
            work,
        },
        other => other,
    }
}

trait Acosh1p {
    fn acosh_1p(self) -> f64;
}

impl Acosh1p for f64 {
    // acosh(1 + y) without cancellation for small y
    fn acosh_1p(self) -> f64 {
        (self + (self * (self + 2.0)).sqrt()).ln_1p()
    }
}

fn descale(est: Estimate, x: f64, factor: f64) -> Estimate {
    est.scale((-x).exp() * factor)
}

/// `n̂(x) = (1/π²) ∫₀^∞ s² / (e^{√(s²+x²)} - 1) ds`.
pub fn quad_number_density(x: ReducedState, cfg: &QuadratureConfig) -> Result<Estimate> {
    let x = x.x();
    let est = momentum_integral("quad_number_density", x, |s, _| s * s, cfg)?;
    Ok(descale(est, x, 1.0 / (PI * PI)))
}

/// Mean speed over `c`: `∫ s³/ε̂ n ds / ∫ s² n ds`, from `p = ε v/c²`.
pub fn quad_mean_speed(x: ReducedState, cfg: &QuadratureConfig) -> Result<Estimate> {
    let x = x.x();
    let num = momentum_integral("quad_mean_speed", x, |s, e| s * s * (s / e), cfg)?;
    let den = momentum_integral("quad_mean_speed", x, |s, _| s * s, cfg)?;
    let value = num.value / den.value;
    Ok(Estimate {
        value,
        error: value * (num.rel_error() + den.rel_error()),
    })
}

/// `û(x) = (1/π²) ∫₀^∞ s² ε̂ / (e^ε̂ - 1) ds`.
pub fn quad_energy_density(x: ReducedState, cfg: &QuadratureConfig) -> Result<Estimate> {
    let x = x.x();
    let est = momentum_integral("quad_energy_density", x, |s, e| s * s * e, cfg)?;
    Ok(descale(est, x, 1.0 / (PI * PI)))
}

/// `R̂(x) = (1/4π²) ∫ₓ^∞ ε̂ (ε̂² - x²) / (e^ε̂ - 1) dε̂`, the flux `u·v/4`
/// integrated from the threshold `ω = mc²/ħ`.
pub fn quad_radiance(x: ReducedState, cfg: &QuadratureConfig) -> Result<Estimate> {
    let x = x.x();
    let est = integrate_adaptive(
        |u| {
            let energy = x + u;
            energy * u * (u + 2.0 * x) * occupation_scaled(energy, u)
        },
        Domain::Finite {
            lower: 0.0,
            upper: cfg.tail_cutoff,
        },
        cfg,
    )
    .map_err(|e| relabel(e, "quad_radiance"))?;
    Ok(descale(est, x, 1.0 / (4.0 * PI * PI)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn rs(x: f64) -> ReducedState {
        ReducedState::new(x).unwrap()
    }

    const ZETA3: f64 = 1.202_056_903_159_594_3;

    #[test]
    fn gamma_three() {
        let cfg = QuadratureConfig::default();
        let est = integrate_adaptive(
            |s| s * s * (-s).exp(),
            Domain::SemiInfinite {
                lower: 0.0,
                decay_rate: 1.0,
            },
            &cfg,
        )
        .unwrap();
        assert!(rel(est.value, 2.0) < cfg.rel_tol());
        assert!(est.error <= cfg.rel_tol() * est.value);
    }

    #[test]
    fn bose_integral() {
        let cfg = QuadratureConfig::default();
        let est = integrate_adaptive(
            |s| s.powi(3) / s.exp_m1(),
            Domain::SemiInfinite {
                lower: 0.0,
                decay_rate: 1.0,
            },
            &cfg,
        )
        .unwrap();
        assert!(rel(est.value, PI.powi(4) / 15.0) < cfg.rel_tol());
    }

    #[test]
    fn quarter_circle_threshold_shape() {
        let cfg = QuadratureConfig::default();
        let est = integrate_adaptive(
            |t| (1.0 - t * t).max(0.0).sqrt(),
            Domain::Finite {
                lower: 0.0,
                upper: 1.0,
            },
            &cfg,
        )
        .unwrap();
        assert!(rel(est.value, PI / 4.0) < cfg.rel_tol());
    }

    #[test]
    fn depth_exhaustion_is_reported() {
        let cfg = QuadratureConfig::new(1e-14, 20, 40.0).unwrap();
        let r = integrate_adaptive(
            |t: f64| t.abs().sqrt().recip(),
            Domain::Finite {
                lower: -1.0,
                upper: 1.0,
            },
            &cfg,
        );
        match r {
            Err(Error::NoConvergence {
                estimate, error, ..
            }) => {
                assert!(estimate > 0.0 && error > 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn config_invariants() {
        assert!(QuadratureConfig::new(1e-15, 50, 40.0).is_err());
        assert!(QuadratureConfig::new(1e-5, 50, 40.0).is_err());
        assert!(QuadratureConfig::new(1e-10, 19, 40.0).is_err());
        assert!(QuadratureConfig::new(1e-10, 20, 39.0).is_err());
        assert!(QuadratureConfig::new(1e-14, 20, 40.0).is_ok());
    }

    #[test]
    fn massless_limits() {
        let cfg = QuadratureConfig::default();
        let n = quad_number_density(rs(0.0), &cfg).unwrap().value;
        assert!(rel(n, 2.0 * ZETA3 / (PI * PI)) < 1e-10);
        assert_eq!(quad_mean_speed(rs(0.0), &cfg).unwrap().value, 1.0);
        let u = quad_energy_density(rs(0.0), &cfg).unwrap().value;
        assert!(rel(u, PI * PI / 15.0) < 1e-10);
        let r = quad_radiance(rs(0.0), &cfg).unwrap().value;
        assert!(rel(r, PI * PI / 60.0) < 1e-10);
    }

    // mpmath quad at 25 digits
    #[test]
    fn reference_values() {
        let cfg = QuadratureConfig::default();
        let cases = [
            (
                0.1,
                0.241_816_153_925_526_1,
                0.995_444_173_256_797_3,
                0.657_142_830_580_785_7,
                0.164_093_313_067_673_8,
            ),
            (
                1.0,
                0.180_151_993_884_610_77,
                0.895_091_982_272_019_3,
                0.585_524_901_514_049_9,
                0.136_826_780_537_138_32,
            ),
            (
                5.0,
                0.013_475_048_752_600_135,
                0.608_906_738_355_857,
                0.091_728_245_415_880_08,
                0.014_697_151_518_677_122,
            ),
            (
                20.0,
                2.565_267_404_639_830_5e-8,
                0.341_922_172_546_319_86,
                5.538_207_399_863_74e-7,
                4.834_611_848_987_657_5e-8,
            ),
        ];
        for (x, n, v, u, r) in cases {
            assert!(
                rel(quad_number_density(rs(x), &cfg).unwrap().value, n) < 1e-10,
                "n({x})"
            );
            assert!(
                rel(quad_mean_speed(rs(x), &cfg).unwrap().value, v) < 1e-10,
                "v({x})"
            );
            assert!(
                rel(quad_energy_density(rs(x), &cfg).unwrap().value, u) < 1e-10,
                "u({x})"
            );
            assert!(
                rel(quad_radiance(rs(x), &cfg).unwrap().value, r) < 1e-10,
                "r({x})"
            );
        }
    }

    #[test]
    fn substitution_switch_is_seamless() {
        // both branches near the switch agree with each other's trend
        let cfg = QuadratureConfig::new(1e-12, 50, 50.0).unwrap();
        let below = quad_number_density(rs(LARGE_X), &cfg).unwrap().value;
        let above = quad_number_density(rs(LARGE_X * (1.0 + 1e-12)), &cfg)
            .unwrap()
            .value;
        assert!(rel(above, below) < 1e-10);
    }

    #[test]
    fn huge_x_underflows_quietly() {
        let cfg = QuadratureConfig::default();
        let n = quad_number_density(rs(1e4), &cfg).unwrap().value;
        assert!(n.is_finite() && n < 1e-300);
        let v = quad_mean_speed(rs(1e4), &cfg).unwrap().value;
        assert!(rel(v, (8.0 / (PI * 1e4)).sqrt()) < 1e-3);
    }

    #[test]
    fn nonrelativistic_mean_speed() {
        let cfg = QuadratureConfig::default();
        let x = 100.0;
        let v = quad_mean_speed(rs(x), &cfg).unwrap().value;
        assert!(rel(v, (8.0 / (PI * x)).sqrt()) < 0.01);
    }

    #[test]
    fn energy_exceeds_rest_energy() {
        let cfg = QuadratureConfig::default();
        for &x in &[0.01, 0.5, 3.0, 40.0, 300.0] {
            let n = quad_number_density(rs(x), &cfg).unwrap().value;
            let u = quad_energy_density(rs(x), &cfg).unwrap().value;
            assert!(u >= x * n, "x = {x}");
        }
    }

    #[test]
    fn tolerance_refinement_within_reported_error() {
        let coarse = QuadratureConfig::new(1e-8, 50, 50.0).unwrap();
        let fine = coarse.with_rel_tol(5e-9).unwrap();
        for &x in &[0.0, 0.05, 1.0, 10.0, 50.0] {
            let x = rs(x);
            type Quad = fn(ReducedState, &QuadratureConfig) -> Result<Estimate>;
            let ops: [Quad; 4] = [
                quad_number_density,
                quad_mean_speed,
                quad_energy_density,
                quad_radiance,
            ];
            for op in ops {
                let a = op(x, &coarse).unwrap();
                let b = op(x, &fine).unwrap();
                assert!((a.value - b.value).abs() <= a.error, "{x:?}");
            }
        }
    }

    #[test]
    fn truncation_insensitivity() {
        let short = QuadratureConfig::new(1e-13, 50, 40.0).unwrap();
        let long = short.with_tail_cutoff(60.0).unwrap();
        for &x in &[0.0, 0.5, 5.0, 31.0, 100.0] {
            let x = rs(x);
            let pairs = [
                (
                    quad_number_density(x, &short),
                    quad_number_density(x, &long),
                ),
                (
                    quad_energy_density(x, &short),
                    quad_energy_density(x, &long),
                ),
                (quad_radiance(x, &short), quad_radiance(x, &long)),
                (quad_mean_speed(x, &short), quad_mean_speed(x, &long)),
            ];
            for (a, b) in pairs {
                let (a, b) = (a.unwrap().value, b.unwrap().value);
                assert!(rel(a, b) < 1e-12, "{x:?}: {a} vs {b}");
            }
        }
    }
}
