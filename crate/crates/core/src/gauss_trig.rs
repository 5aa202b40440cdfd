//! Gaussian cosine and sine, `C_g(x) = e^{-x²}` and `S_g(x) = e^{-x²} erfi(x)`,
//! with their complex combination, derivatives and integrals.
//!
//! Both are images of a Lorentzian under the Gauss weight
//! `ĉ^α φ₀ = 1/Γ(α+1)`:
//! `C_g = 1/(1 + ĉx²) φ₀` and `S_g = ĉ^{1/2}x/(1 + ĉx²) φ₀`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::EvalConfig;
use crate::error::{domain, Result};
use crate::oracle::{
    adaptive_quad, principal_value_quad, semi_infinite_quad_with, QuadResult, SemiInfinite, Trap,
};
use crate::special::{
    dawson, hermite_classical, hyp1f1, hyp2f1, require_converged, umbral_geometric, SeriesResult,
    Summation, UmbralWeight,
};
use crate::special::dd::Dd;

/// Largest |x| at which the power series for the sine and its relatives are used.
pub const SG_SERIES_LIMIT: f64 = 3.0;

/// Largest |x| at which the antiderivative series is summed directly.
pub const SG_ANTIDERIVATIVE_SERIES_LIMIT: f64 = 4.0;

/// Half-width of the principal-value window in [`kk_residual`].
pub const KK_WINDOW: f64 = 30.0;

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// One sample of the Gaussian trigonometric pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussTrigPoint {
    pub x: f64,
    pub cg: f64,
    pub sg: f64,
}

impl GaussTrigPoint {
    pub fn at(x: f64, cfg: &EvalConfig) -> Result<Self> {
        Ok(GaussTrigPoint {
            x,
            cg: cg(x),
            sg: sg(x, cfg)?,
        })
    }

    /// `C_g² + S_g²`, which equals `e^{-2x²}(1 + erfi(x)²)`.
    pub fn norm_sqr(&self) -> f64 {
        self.cg * self.cg + self.sg * self.sg
    }
}

/// Gaussian cosine `e^{-x²}`.
pub fn cg(x: f64) -> f64 {
    (-x * x).exp()
}

/// Gaussian sine `(2/√π) F(x)` with `F` Dawson's integral.
pub fn sg(x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(FRAC_2_SQRT_PI * dawson(x, cfg)?)
}

/// Gaussian sine from its umbral image: `S_g(x) = x Σ w(r + 1/2)(-x²)^r`
/// with the Gauss weight, i.e. `Σ (-1)^r x^{2r+1}/Γ(r + 3/2)`.
///
/// Kept as an independent route for |x| ≤ [`SG_SERIES_LIMIT`].
pub fn sg_series(x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    if !(x.abs() <= SG_SERIES_LIMIT) {
        return Err(domain(format!("sg series path limited to |x| <= {SG_SERIES_LIMIT}, got {x}")));
    }
    Ok(umbral_geometric(&UmbralWeight::gauss(), -x * x, 0.5, cfg)?.scaled(x))
}

/// `E_g(x) = C_g(x) + i S_g(x)`.
pub fn eg(x: f64, cfg: &EvalConfig) -> Result<Complex64> {
    Ok(Complex64::new(cg(x), sg(x, cfg)?))
}

/// Fried–Conte plasma dispersion function on the real axis,
/// `Z(x) = i√π E_g(x) = -√π S_g(x) + i√π e^{-x²}`.
pub fn fried_conte_z(x: f64, cfg: &EvalConfig) -> Result<Complex64> {
    Ok(Complex64::i() * PI.sqrt() * eg(x, cfg)?)
}

/// `C_g^{(m)}(x) = (-1)^m H_m(x) e^{-x²}`.
pub fn cg_derivative(m: u32, x: f64) -> f64 {
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    sign * hermite_classical(m, x) * cg(x)
}

/// m-th derivative of the Gaussian sine.
///
/// Uses [`sg_derivative_series`] for |x| ≤ [`SG_SERIES_LIMIT`] and
/// [`sg_derivative_recurrence`] beyond.
pub fn sg_derivative(m: u32, x: f64, cfg: &EvalConfig) -> Result<f64> {
    if x.abs() <= SG_SERIES_LIMIT {
        Ok(sg_derivative_series(m, x, cfg)?.value)
    } else {
        sg_derivative_recurrence(m, x, cfg)
    }
}

/// Termwise derivative of the sine series:
/// `S_g^{(m)}(x) = (2^{m+1}/√π) Σ_{r ≥ ⌈(m-1)/2⌉} (-1)^r (r+1)! (2r+1)! (2x)^{2r+1-m} / ([2(r+1)]! (2r+1-m)!)`.
///
/// Terms with `2r + 1 < m` are identically zero and skipped. Summed in
/// double-double; limited to |x| ≤ [`SG_SERIES_LIMIT`].
pub fn sg_derivative_series(m: u32, x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    if !(x.abs() <= SG_SERIES_LIMIT) {
        return Err(domain(format!(
            "sg derivative series limited to |x| <= {SG_SERIES_LIMIT}, got {x}"
        )));
    }
    let m = m as i64;
    let r0 = m / 2; // ⌈(m-1)/2⌉
    let k0 = 2 * r0 + 1 - m;
    // (r+1)!(2r+1)!/[2(r+1)]! = r!/2, so each term is
    // (2^m/√π) (-1)^r r! (2x)^k / k! with k = 2r + 1 - m
    let two_x = 2.0 * x;
    let mut term = Dd::from(2f64.powi(m as i32) / PI.sqrt());
    for j in 1..=r0 {
        term *= j as f64;
    }
    if r0 % 2 == 1 {
        term = -term;
    }
    if k0 == 1 {
        term *= two_x;
    }
    let step = Dd::new_mul(two_x, two_x);
    let mut sum = Summation::new(cfg);
    let (mut r, mut k) = (r0, k0);
    loop {
        if sum.push(term) {
            break;
        }
        // ratio to the next term: -(r+1)(2x)²/((k+1)(k+2))
        term = -(term * step) * (r + 1) as f64 / ((k + 1) * (k + 2)) as f64;
        r += 1;
        k += 2;
    }
    require_converged(sum.finish())
}

/// m-th derivative of `S_g = (2/√π)F` from the Dawson equation
/// `F' = 1 - 2xF`, differentiated into `F^{(k+1)} = -2x F^{(k)} - 2k F^{(k-1)}`.
pub fn sg_derivative_recurrence(m: u32, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let f0 = dawson(x, cfg)?;
    if m == 0 {
        return Ok(FRAC_2_SQRT_PI * f0);
    }
    let mut prev = f0;
    let mut cur = 1.0 - 2.0 * x * f0;
    for k in 1..m {
        let next = -2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(FRAC_2_SQRT_PI * cur)
}

/// `∫₀ˣ S_g(ξ) dξ`. Even in x.
///
/// For |x| ≤ [`SG_ANTIDERIVATIVE_SERIES_LIMIT`] this is the series
/// `-(1/(4√π)) Σ_{r≥1} (-1)^r (2x)^{2r} (r-1)!/(r (2r-1)!)`; beyond, the series
/// value at the limit plus adaptive quadrature of `S_g` over the remainder.
pub fn sg_antiderivative(x: f64, cfg: &EvalConfig) -> Result<f64> {
    let ax = x.abs();
    if ax <= SG_ANTIDERIVATIVE_SERIES_LIMIT {
        return Ok(sg_antiderivative_series(ax, cfg)?.value);
    }
    let base = sg_antiderivative_series(SG_ANTIDERIVATIVE_SERIES_LIMIT, cfg)?.value;
    let trap = Trap::default();
    let rest = adaptive_quad(|t| trap.call(sg(t, cfg)), SG_ANTIDERIVATIVE_SERIES_LIMIT, ax, cfg);
    Ok(base + trap.finish(rest)?.value)
}

/// Series form of [`sg_antiderivative`], any x (cancellation grows like e^{x²}).
pub fn sg_antiderivative_series(x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    if x == 0.0 {
        return Ok(SeriesResult::exact(0.0));
    }
    // r = 1 term is x²/√π; ratio t_{r+1}/t_r = -2x² r/((r+1)(2r+1))
    let x2 = Dd::new_mul(x, x);
    let mut term = x2 / PI.sqrt();
    let mut sum = Summation::new(cfg);
    for r in 1u64.. {
        if sum.push(term) {
            break;
        }
        term = -(term * x2) * (2 * r) as f64 / ((r + 1) * (2 * r + 1)) as f64;
    }
    require_converged(sum.finish())
}

/// `∫₀ˣ e^{-ξ²} dξ = (√π/2) erf(x)`.
///
/// Uses the termwise image of `ĉ^{-1/2} tan⁻¹(ĉ^{1/2}x)`,
/// `Σ (-1)^r x^{2r+1}/((2r+1) r!)`, for |x| ≤ [`SG_SERIES_LIMIT`], and `erf`
/// beyond.
pub fn gauss_primitive(x: f64, cfg: &EvalConfig) -> Result<f64> {
    if x.abs() <= SG_SERIES_LIMIT {
        Ok(gauss_primitive_series(x, cfg)?.value)
    } else {
        Ok(0.5 * PI.sqrt() * libm::erf(x))
    }
}

/// Series form of [`gauss_primitive`].
pub fn gauss_primitive_series(x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    let x2 = Dd::new_mul(x, x);
    let mut power = Dd::from(x);
    let mut sum = Summation::new(cfg);
    for r in 0u64.. {
        if sum.push(power / (2 * r + 1) as f64) {
            break;
        }
        power = -(power * x2) / (r + 1) as f64;
    }
    require_converged(sum.finish())
}

/// `S_g(x) + (1/π) 𝒫∫ C_g(ξ)/(ξ - x) dξ`, which vanishes when the
/// Kramers–Kronig pairing holds with the stated sign.
///
/// The principal value is taken over `[x - 30, x + 30]`.
pub fn kk_residual(x: f64, cfg: &EvalConfig) -> Result<f64> {
    let pv = principal_value_quad(cg, x, KK_WINDOW, cfg)?;
    Ok(sg(x, cfg)? + pv.value / PI)
}

/// `∫₀^∞ S_g(x, α) dx = (1/√π) ₂F₁(1/2, 1; 3/2; α)`, |α| < 1, where
/// `S_g(x, α) = (2/√π) x e^{-x²} ₁F₁(1/2; 3/2; αx²)`.
pub fn sg_alpha_integral(alpha: f64, cfg: &EvalConfig) -> Result<f64> {
    if !(alpha.abs() < 1.0) {
        return Err(domain(format!("sg alpha integral needs |alpha| < 1, got {alpha}")));
    }
    Ok(hyp2f1(0.5, 1.0, 1.5, alpha, cfg)?.value / PI.sqrt())
}

/// Quadrature companion of [`sg_alpha_integral`].
///
/// The integrand decays like `e^{-(1-α)x²}`, so it is integrated over
/// `[0, X]` with `(1-α)X² = 80`.
pub fn sg_alpha_integral_quadrature(alpha: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    if !(alpha.abs() < 1.0) {
        return Err(domain(format!("sg alpha integral needs |alpha| < 1, got {alpha}")));
    }
    let upper = (80.0 / (1.0 - alpha.max(0.0))).sqrt();
    let trap = Trap::default();
    let integrand = |x: f64| {
        let f = hyp1f1(0.5, 1.5, alpha * x * x, cfg).map(|r| r.value);
        FRAC_2_SQRT_PI * x * cg(x) * trap.call(f)
    };
    let r = adaptive_quad(integrand, 0.0, upper, cfg);
    trap.finish(r)
}

/// `∫_{-∞}^{∞} S_g(x)/x dx` by quadrature: twice the half-line integral,
/// with a rational tail map for the `1/(√π x²)` decay.
pub fn sg_over_x_integral(cfg: &EvalConfig) -> Result<QuadResult> {
    let trap = Trap::default();
    let integrand = |x: f64| {
        if x == 0.0 {
            FRAC_2_SQRT_PI
        } else {
            trap.call(sg(x, cfg)) / x
        }
    };
    let r = semi_infinite_quad_with(integrand, SemiInfinite::rational(), cfg);
    Ok(trap.finish(r)?.scaled(2.0))
}

/// Closed form of [`sg_over_x_integral`]: `2 ₂F₁(1/2, 1/2; 3/2; 1) = π`.
pub fn sg_over_x_closed_form(cfg: &EvalConfig) -> Result<f64> {
    Ok(2.0 * hyp2f1(0.5, 0.5, 1.5, 1.0, cfg)?.value)
}
