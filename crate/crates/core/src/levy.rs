//! One-sided Lévy stable densities
//! `g_α(x) = -(1/π) Im ∫₀^∞ e^{-sx - e^{iπα} s^α} ds`, 0 < α < 1,
//! and the modified family `g_{α,ν}` carrying an extra `(-s)^ν = e^{iπν} s^ν`.
//!
//! The series `-(1/(πx)) Σ (-1)^r Γ(αr+1) sin(παr) x^{-αr}/r!` is the
//! exponential image of the Lévy weight `f̂^β ε₀ = Γ(β+1) sin(πβ)` at
//! `-x^{-α}`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::EvalConfig;
use crate::error::{domain, Result};
use crate::oracle::{adaptive_quad, semi_infinite_quad, semi_infinite_quad_with, QuadResult, SemiInfinite, Trap};
use crate::special::{gamma, sin_pi, umbral_exp, SeriesResult, UmbralWeight};

/// Below this point the density comes from the contour integral.
pub const LEVY_SERIES_MIN: f64 = 5.0;

/// Stability index α and modification order ν.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevyParams {
    pub alpha: f64,
    #[serde(default)]
    pub nu: f64,
}

impl LevyParams {
    pub fn new(alpha: f64, nu: f64) -> Result<Self> {
        let p = LevyParams { alpha, nu };
        p.validate()?;
        Ok(p)
    }

    pub fn stable(alpha: f64) -> Result<Self> {
        Self::new(alpha, 0.0)
    }

    /// `0 < α < 1` and `ν > -1`; the latter keeps `s^ν` integrable at the origin
    /// and admits the Weibull case `ν = α - 1`.
    pub fn validate(&self) -> Result<()> {
        check_alpha(self.alpha)?;
        if !(self.nu > -1.0 && self.nu.is_finite()) {
            return Err(domain(format!("nu must exceed -1, got {}", self.nu)));
        }
        Ok(())
    }
}

/// A numerical transform next to its closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformCheck {
    pub numeric: f64,
    pub err_estimate: f64,
    pub closed_form: f64,
    /// `numeric - closed_form`
    pub residual: f64,
}

impl TransformCheck {
    fn new(q: QuadResult, closed_form: f64) -> Self {
        TransformCheck {
            numeric: q.value,
            err_estimate: q.err_estimate,
            closed_form,
            residual: q.value - closed_form,
        }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(domain(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    Ok(())
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0) || x.is_nan() {
        return Err(domain(format!("x must be positive, got {x}")));
    }
    Ok(())
}

/// `g_α(x)`: series for `x ≥ LEVY_SERIES_MIN`, contour integral below.
pub fn levy_density(x: f64, p: LevyParams, cfg: &EvalConfig) -> Result<f64> {
    p.validate()?;
    check_x(x)?;
    if p.nu != 0.0 {
        return Err(domain("levy_density takes nu = 0; use levy_modified_density"));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x >= LEVY_SERIES_MIN {
        Ok(levy_density_series(x, p.alpha, cfg)?.value)
    } else {
        Ok(contour_integral(x, p.alpha, 0.0, cfg)?.value)
    }
}

/// The series in powers of `x^{-α}`.
///
/// `Γ(αr+1)/r!` decays like `r!^{α-1}`, so for 0 < α < 1 the series converges
/// for every x > 0; small x only costs cancellation.
pub fn levy_density_series(x: f64, alpha: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    check_alpha(alpha)?;
    check_x(x)?;
    let w = UmbralWeight::levy().rescaled(alpha);
    let r = umbral_exp(&w, -x.powf(-alpha), 0.0, cfg)?;
    let scale = -1.0 / (PI * x);
    Ok(SeriesResult {
        value: scale * r.value,
        err_estimate: scale.abs() * r.err_estimate,
        ..r
    })
}

/// `g_α(x)` from the integral representation alone, at any x > 0.
pub fn levy_density_integral(x: f64, alpha: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    check_alpha(alpha)?;
    check_x(x)?;
    contour_integral(x, alpha, 0.0, cfg)
}

/// `g_{α,ν}(x) = -(1/π) Im ∫₀^∞ (-s)^ν e^{-sx - e^{iπα} s^α} ds`.
///
/// `(-s)^ν` takes the same principal branch as `(-1)^α`, so the factor is
/// `e^{iπν} s^ν`. With it the Laplace transform is `p^ν e^{-p^α}`; at
/// α = 1/2, ν = -1/2 the density is `e^{-1/(4x)}/√(πx)`. A bare `s^ν` gives
/// the Dawson-type partner `2F(1/(2√x))/(π√x)` there instead.
pub fn levy_modified_density(x: f64, p: LevyParams, cfg: &EvalConfig) -> Result<f64> {
    p.validate()?;
    check_x(x)?;
    Ok(contour_integral(x, p.alpha, p.nu, cfg)?.value)
}

/// Evaluates `-(1/π) Im ∫₀^∞ e^{iπν} s^ν e^{-sx - e^{iπα} s^α} ds` on the ray
/// `s = t e^{iθ}`, `θ = -απ/(1+α)`.
///
/// On that ray both exponents have real part `-c·(tx)` and `-c·t^α` with the
/// same `c = cos(απ/(1+α)) > 0`, so the integrand decays without oscillating
/// away. The substitution `t^α = v/c` removes the cusp at the origin and makes
/// the tail `e^{-v}`.
fn contour_integral(x: f64, alpha: f64, nu: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    let phi = alpha * PI / (1.0 + alpha);
    let theta = -phi;
    let c = phi.cos();
    let rot = Complex64::from_polar(1.0, theta);
    let stable = Complex64::from_polar(1.0, phi);
    let nu_phase = Complex64::from_polar(1.0, nu * (theta + PI));
    let inv_alpha = 1.0 / alpha;
    let f = |v: f64| {
        if v == 0.0 {
            return 0.0;
        }
        let t = (v / c).powf(inv_alpha);
        let jac = t.powf(nu + 1.0) / (alpha * v);
        // e^{iπα} s^α = e^{iφ} v/c
        let expo = -rot * (t * x) - stable * (v / c);
        let z = rot * nu_phase * expo.exp() * jac;
        -z.im / PI
    };
    let x_scale = (x * c).powf(-alpha) * c;
    if x_scale < 1e-2 {
        // the mass sits at v ~ (cx)^{-α} c; split there so the panels see it
        let head = adaptive_quad(f, 0.0, 50.0 * x_scale, cfg)?;
        let tail = semi_infinite_quad_with(
            |u| f(50.0 * x_scale + u),
            SemiInfinite::default(),
            cfg,
        )?;
        return Ok(head.combine(tail));
    }
    semi_infinite_quad(f, cfg)
}

/// `⟨x^μ⟩ = Γ(μ) sin(πμ) / (sin(πμ/α) Γ(μ/α))`, finite only for 0 < μ < α.
pub fn levy_moment(mu: f64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(mu > 0.0 && mu < alpha) {
        return Err(domain(format!(
            "moment of order {mu} is undefined for alpha = {alpha}; need 0 < mu < alpha"
        )));
    }
    Ok(gamma(mu)? * sin_pi(mu) / (sin_pi(mu / alpha) * gamma(mu / alpha)?))
}

/// `∫₀^∞ x^μ g_α(x) dx` by quadrature over `y = ln x` up to `MOMENT_CUT`,
/// plus the remaining tail integrated term by term from the `x^{-α}` series.
///
/// The tail decays only like `e^{-(α-μ)y}`, which no finite window captures
/// as μ → α; termwise it is `Σ c_r e^{(μ-αr)Y}/(αr-μ)` in closed form.
pub fn levy_moment_quadrature(mu: f64, alpha: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    check_alpha(alpha)?;
    if !(mu > -1.0 && mu < alpha) {
        return Err(domain(format!("moment of order {mu} diverges for alpha = {alpha}")));
    }
    let p = LevyParams::stable(alpha)?;
    let trap = Trap::default();
    let f = |u: f64| {
        let x = (MOMENT_CUT - u).exp();
        if x == 0.0 {
            return 0.0;
        }
        x.powf(mu + 1.0) * trap.call(levy_density(x, p, cfg))
    };
    let r = semi_infinite_quad(f, cfg);
    let head = trap.finish(r)?;
    Ok(head.combine(moment_tail(mu, alpha, cfg)?))
}

/// Split point `Y = ln x` between quadrature and the termwise tail.
const MOMENT_CUT: f64 = 10.0;

fn moment_tail(mu: f64, alpha: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    let w = UmbralWeight::levy();
    let decay = (-alpha * MOMENT_CUT).exp();
    let mut sum = 0.0;
    let mut power = 1.0;
    let mut fact = 1.0;
    for r in 1..=cfg.max_terms {
        let rf = r as f64;
        power *= -decay;
        fact *= rf;
        let term = w.eval(alpha * rf) * power / fact / (alpha * rf - mu);
        sum += term;
        // sin(παr) vanishes for some r at rational α, so test the envelope
        let envelope = gamma(alpha * rf + 1.0)? * power.abs() / fact / (alpha * rf - mu);
        if envelope <= f64::EPSILON * sum.abs() {
            let scale = -((mu * MOMENT_CUT).exp()) / PI;
            return Ok(QuadResult {
                value: scale * sum,
                err_estimate: (scale * envelope).abs(),
                evaluations: r,
                converged: true,
            });
        }
    }
    Err(crate::error::Error::Convergence {
        terms: cfg.max_terms,
        last_term: sum,
    })
}

/// `∫₀^∞ g_α(x) dx`, which should be 1.
pub fn levy_mass(alpha: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    levy_moment_quadrature(0.0, alpha, cfg)
}

/// `∫₀^∞ e^{-px} g(x) dx` with `x = y/p`.
fn laplace_of(p: f64, g: impl Fn(f64) -> Result<f64>, cfg: &EvalConfig) -> Result<QuadResult> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(domain(format!("Laplace variable must be positive, got {p}")));
    }
    let trap = Trap::default();
    let f = |y: f64| {
        if y == 0.0 {
            return 0.0;
        }
        (-y).exp() * trap.call(g(y / p))
    };
    let r = semi_infinite_quad(f, cfg);
    Ok(trap.finish(r)?.scaled(1.0 / p))
}

/// Numerical Laplace transform of `g_α` beside the stretched exponential
/// `e^{-p^α}`.
pub fn levy_laplace(p: f64, alpha: f64, cfg: &EvalConfig) -> Result<TransformCheck> {
    let params = LevyParams::stable(alpha)?;
    let q = laplace_of(p, |x| levy_density(x, params, cfg), cfg)?;
    Ok(TransformCheck::new(q, (-p.powf(alpha)).exp()))
}

/// Numerical Laplace transform of `g_{α,α-1}` beside `p^{α-1} e^{-p^α}`.
pub fn weibull_laplace_check(p: f64, alpha: f64, cfg: &EvalConfig) -> Result<TransformCheck> {
    let params = LevyParams::new(alpha, alpha - 1.0)?;
    let q = laplace_of(p, |x| levy_modified_density(x, params, cfg), cfg)?;
    Ok(TransformCheck::new(q, p.powf(alpha - 1.0) * (-p.powf(alpha)).exp()))
}
