//! Fresnel integrals `C(x) = ∫₀ˣ cos(πη²/2) dη`, `S(x) = ∫₀ˣ sin(πη²/2) dη`
//! as images of the Pochhammer weights
//! `χ̂_c^n = (1/4)_n/((1/2)_n (5/4)_n)` and `χ̂_s^n = (3/4)_n/((3/2)_n (7/4)_n)`:
//!
//! `C(x) = x ₁F₂(1/4; 1/2, 5/4; -(πx²/4)²)`,
//! `S(x) = (π/6) x³ ₁F₂(3/4; 3/2, 7/4; -(πx²/4)²)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::config::EvalConfig;
use crate::error::{domain, Error, Result};
use crate::oracle::{adaptive_quad, oscillatory_tail_quad, semi_infinite_quad_with, QuadResult, SemiInfinite, Trap};
use crate::special::{gamma, hyp1f2, pochhammer};

/// Largest |x| summed through `₁F₂`. Terms peak near `e^{πx²/2}`, about 1e17
/// here, which double-double accumulation still resolves to ~1e-15.
pub const FRESNEL_SERIES_LIMIT: f64 = 5.0;

/// `(x, C(x), S(x))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FresnelPoint {
    pub x: f64,
    pub c: f64,
    pub s: f64,
}

impl FresnelPoint {
    pub fn at(x: f64, cfg: &EvalConfig) -> Result<Self> {
        Ok(FresnelPoint {
            x,
            c: fresnel_c(x, cfg)?,
            s: fresnel_s(x, cfg)?,
        })
    }
}

fn check_x(x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(domain(format!("Fresnel argument must be finite, got {x}")));
    }
    Ok(())
}

fn hyp_argument(x: f64) -> f64 {
    let q = 0.25 * PI * x * x;
    -q * q
}

/// `C(x)` through the `χ̂_c` image for `|x| ≤ FRESNEL_SERIES_LIMIT`, and as
/// `1/2` minus an oscillatory tail beyond.
pub fn fresnel_c(x: f64, cfg: &EvalConfig) -> Result<f64> {
    check_x(x)?;
    if x.abs() <= FRESNEL_SERIES_LIMIT {
        return fresnel_c_series(x, cfg);
    }
    let tail = fresnel_tail(x.abs(), Kind::Cos, cfg)?;
    Ok(x.signum() * (0.5 - tail.value))
}

/// `S(x)`, as [`fresnel_c`] with the `χ̂_s` image.
pub fn fresnel_s(x: f64, cfg: &EvalConfig) -> Result<f64> {
    check_x(x)?;
    if x.abs() <= FRESNEL_SERIES_LIMIT {
        return fresnel_s_series(x, cfg);
    }
    let tail = fresnel_tail(x.abs(), Kind::Sin, cfg)?;
    Ok(x.signum() * (0.5 - tail.value))
}

/// `x ₁F₂(1/4; 1/2, 5/4; -(πx²/4)²)` at any x.
pub fn fresnel_c_series(x: f64, cfg: &EvalConfig) -> Result<f64> {
    check_x(x)?;
    Ok(x * hyp1f2(0.25, 0.5, 1.25, hyp_argument(x), cfg)?.value)
}

/// `(π/6) x³ ₁F₂(3/4; 3/2, 7/4; -(πx²/4)²)` at any x.
pub fn fresnel_s_series(x: f64, cfg: &EvalConfig) -> Result<f64> {
    check_x(x)?;
    Ok(PI / 6.0 * x.powi(3) * hyp1f2(0.75, 1.5, 1.75, hyp_argument(x), cfg)?.value)
}

#[derive(Clone, Copy)]
enum Kind {
    Cos,
    Sin,
}

/// `∫_x^∞ cos(πη²/2) dη` or the sine analogue, for x > 0, written as
/// `∫_{x²}^∞ trig(πu/2)/(2√u) du` so that the sign changes sit on the
/// integers: odd ones for the cosine, even ones for the sine.
fn fresnel_tail(x: f64, kind: Kind, cfg: &EvalConfig) -> Result<QuadResult> {
    let a = x * x;
    let f = move |u: f64| {
        let arg = 0.5 * PI * u;
        let trig = match kind {
            Kind::Cos => arg.cos(),
            Kind::Sin => arg.sin(),
        };
        trig / (2.0 * u.sqrt())
    };
    let offset = match kind {
        Kind::Cos => 1.0,
        Kind::Sin => 0.0,
    };
    // first node strictly above a, nodes spaced by 2
    let mut first = 2.0 * ((a - offset) / 2.0).floor() + offset;
    while first <= a {
        first += 2.0;
    }
    oscillatory_tail_quad(f, a, |k| first + 2.0 * k as f64, cfg)
}

/// `C(x)` by direct quadrature of `cos(πη²/2)` over `[0, x]`.
pub fn fresnel_c_quadrature(x: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    check_x(x)?;
    adaptive_quad(|t| (0.5 * PI * t * t).cos(), 0.0, x, cfg)
}

/// `S(x)` by direct quadrature of `sin(πη²/2)` over `[0, x]`.
pub fn fresnel_s_quadrature(x: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    check_x(x)?;
    adaptive_quad(|t| (0.5 * PI * t * t).sin(), 0.0, x, cfg)
}

/// The three ways of reading the umbral value of `∫₀^∞ S(ξ)/ξ³ dξ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImproperReadings {
    /// `(√π/12) Γ(1/4) χ̂_s^{-1/4}`, which equals π/4.
    pub corrected: f64,
    /// The same expression with prefactor `√π/6`; twice the true value.
    pub doubled_prefactor: f64,
    /// `χ̂_c^{-1/4}` in place of `χ̂_s^{-1/4}`; `(1/4)_{-1/4}` needs Γ(0), so
    /// this reading is `None`.
    pub c_weight: Option<f64>,
}

/// `χ̂^{-1/4} = (a)_{-1/4}/((b)_{-1/4} (c)_{-1/4})`.
fn chi_quarter(a: f64, b: f64, c: f64) -> Result<f64> {
    Ok(pochhammer(a, -0.25)? / (pochhammer(b, -0.25)? * pochhammer(c, -0.25)?))
}

/// `∫₀^∞ S(ξ)/ξ³ dξ` in closed form.
///
/// `S(ξ)/ξ³ = (π/6) e^{-(π/4)² ξ⁴ χ̂_s}` and `∫₀^∞ e^{-aξ⁴} dξ = Γ(1/4) a^{-1/4}/4`
/// give `(√π/12) Γ(1/4) χ̂_s^{-1/4}`.
pub fn fresnel_s_improper_integral() -> Result<f64> {
    Ok(PI.sqrt() / 12.0 * gamma(0.25)? * chi_quarter(0.75, 1.5, 1.75)?)
}

pub fn fresnel_s_improper_readings() -> Result<ImproperReadings> {
    let corrected = fresnel_s_improper_integral()?;
    let doubled_prefactor = PI.sqrt() / 6.0 * gamma(0.25)? * chi_quarter(0.75, 1.5, 1.75)?;
    let c_weight = match chi_quarter(0.25, 0.5, 1.25) {
        Ok(chi) => Some(PI.sqrt() / 12.0 * gamma(0.25)? * chi),
        Err(Error::Pole(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(ImproperReadings {
        corrected,
        doubled_prefactor,
        c_weight,
    })
}

/// `∫₀^∞ S(ξ)/ξ³ dξ` by quadrature of the integrand.
///
/// Past `L = FRESNEL_SERIES_LIMIT` the integrand is `1/(2ξ³) - T(ξ)/ξ³` with
/// `T(ξ) = ∫_ξ^∞ sin(πη²/2) dη`. Swapping the order in the second part gives
/// `∫_L^∞ sin(πη²/2) (1/(2L²) - 1/(2η²)) dη`, an oscillatory tail with its
/// sign changes on `η² ∈ 2ℕ`.
pub fn fresnel_s_improper_quadrature(cfg: &EvalConfig) -> Result<QuadResult> {
    const L: f64 = FRESNEL_SERIES_LIMIT;
    let trap = Trap::default();
    let near = |xi: f64| {
        if xi == 0.0 {
            return PI / 6.0;
        }
        trap.call(fresnel_s(xi, cfg)) / xi.powi(3)
    };
    let head = adaptive_quad(near, 0.0, L, cfg);
    let head = trap.finish(head)?;
    let a = L * L;
    let weight = move |u: f64| (0.5 * PI * u).sin() * (0.5 / a - 0.5 / u) / (2.0 * u.sqrt());
    let first = 2.0 * (a / 2.0).floor() + 2.0;
    let swapped = oscillatory_tail_quad(weight, a, |k| first + 2.0 * k as f64, cfg)?;
    let smooth = QuadResult {
        value: 0.5 / (2.0 * a),
        err_estimate: 0.0,
        evaluations: 0,
        converged: true,
    };
    Ok(head.combine(swapped.scaled(-1.0)).combine(smooth))
}

/// `∫₀^∞ e^{-ax⁴} dx = Γ(1/4) a^{-1/4}/4`.
pub fn quartic_gauss_integral(a: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(domain(format!("quartic Gaussian needs a > 0, got {a}")));
    }
    Ok(0.25 * gamma(0.25)? * a.powf(-0.25))
}

pub fn quartic_gauss_integral_quadrature(a: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(domain(format!("quartic Gaussian needs a > 0, got {a}")));
    }
    // x = y a^{-1/4} puts the decay on the unit scale
    let scale = a.powf(-0.25);
    let r = semi_infinite_quad_with(|y| (-(y * y) * (y * y)).exp(), SemiInfinite::default().with_split(6.0), cfg)?;
    Ok(r.scaled(scale))
}
