//! Umbral weights and the series they generate.
//!
//! An umbral pair (operator, vacuum) such as `ĉ^α φ₀ = 1/Γ(α+1)` is realized as
//! a plain weight function `α ↦ w(α)`. An umbral image like `e^{ĉ z} φ₀` or
//! `1/(1 - ĉ z) φ₀` is then resolved termwise: every power `ĉ^k` is replaced by
//! the weight at `k`.

use std::borrow::Cow;
use std::fmt;
use std::sync::Arc;

use super::dd::Dd;

use super::gamma::{gamma, sin_pi};
use super::series::{require_converged, SeriesResult, Summation};
use crate::config::EvalConfig;
use crate::error::{Error, Result};

type WeightFn = dyn Fn(f64) -> f64 + Send + Sync;

/// Exact unit-step ratio `w(α+1)/w(α)`, when the weight has one.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Step {
    None,
    /// `1/(α+1)`
    Gauss,
    /// `(a+α)/(c+α)`
    Pochhammer(f64, f64),
}

impl Step {
    fn ratio(self, alpha: f64) -> Option<Dd> {
        match self {
            Step::None => None,
            Step::Gauss => Some(Dd::from(1.0) / Dd::new_add(alpha, 1.0)),
            Step::Pochhammer(a, c) => Some(Dd::new_add(a, alpha) / Dd::new_add(c, alpha)),
        }
    }
}

/// A weight `α ↦ w(α)` standing in for an umbral operator acting on its vacuum.
#[derive(Clone)]
pub struct UmbralWeight {
    weight: Arc<WeightFn>,
    step: Step,
    domain_note: Cow<'static, str>,
}

impl fmt::Debug for UmbralWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UmbralWeight")
            .field("domain_note", &self.domain_note)
            .finish_non_exhaustive()
    }
}

impl UmbralWeight {
    pub fn new(
        weight: impl Fn(f64) -> f64 + Send + Sync + 'static,
        domain_note: impl Into<Cow<'static, str>>,
    ) -> Self {
        UmbralWeight {
            weight: Arc::new(weight),
            step: Step::None,
            domain_note: domain_note.into(),
        }
    }

    fn with_step(mut self, step: Step) -> Self {
        self.step = step;
        self
    }

    /// `ĉ^α φ₀ = 1/Γ(α+1)`; zero at the poles α = -1, -2, ...
    pub fn gauss() -> Self {
        UmbralWeight::new(
            |a| gamma(a + 1.0).map(|g| 1.0 / g).unwrap_or(0.0),
            "all real α; 1/Γ(α+1) vanishes at negative integers",
        )
        .with_step(Step::Gauss)
    }

    /// `p̂^α γ₀ = Γ(α/n + 1)`.
    pub fn quasi(n: u32) -> Self {
        let n = f64::from(n);
        UmbralWeight::new(
            move |a| gamma(a / n + 1.0).unwrap_or(f64::NAN),
            "α/n + 1 not a non-positive integer",
        )
    }

    /// `κ̂^k φ₀ = (a)_k/(c)_k` for integer k ≥ 0.
    pub fn pochhammer(a: f64, c: f64) -> Self {
        UmbralWeight::new(
            move |k| {
                if k < 0.0 || k != k.floor() {
                    return f64::NAN;
                }
                (0..k as usize)
                    .map(|j| (a + j as f64) / (c + j as f64))
                    .product()
            },
            "non-negative integers; c not a non-positive integer",
        )
        .with_step(Step::Pochhammer(a, c))
    }

    /// `f̂^β ε₀ = Γ(β+1) sin(πβ)`.
    pub fn levy() -> Self {
        UmbralWeight::new(
            |b| {
                let s = sin_pi(b);
                if s == 0.0 {
                    0.0
                } else {
                    gamma(b + 1.0).map(|g| g * s).unwrap_or(f64::NAN)
                }
            },
            "β > -1",
        )
    }

    /// The weight `α ↦ w(scale·α)`; e.g. the Lévy weight at exponent `αr`.
    pub fn rescaled(&self, scale: f64) -> Self {
        let inner = Arc::clone(&self.weight);
        UmbralWeight {
            weight: Arc::new(move |a| inner(scale * a)),
            step: Step::None,
            domain_note: Cow::Owned(format!("{} (argument scaled by {scale})", self.domain_note)),
        }
    }

    pub fn eval(&self, alpha: f64) -> f64 {
        (self.weight)(alpha)
    }

    pub fn domain_note(&self) -> &str {
        &self.domain_note
    }
}

fn checked_weight(w: &UmbralWeight, alpha: f64) -> Result<f64> {
    let v = w.eval(alpha);
    if v.is_nan() {
        Err(Error::Domain(format!(
            "umbral weight undefined at {alpha} ({})",
            w.domain_note()
        )))
    } else if v.is_infinite() {
        Err(Error::Overflow(format!("umbral weight overflows at {alpha}")))
    } else {
        Ok(v)
    }
}

/// Sums `Σ_{r≥0} w(r + shift) c_r` where `c_{r+1} = c_r · z · factor(r)`.
///
/// Weights with an exact unit-step ratio are advanced in double-double; the
/// rest are evaluated pointwise.
fn resolve(
    w: &UmbralWeight,
    z: f64,
    shift: f64,
    cfg: &EvalConfig,
    factor: impl Fn(usize) -> f64,
) -> Result<SeriesResult> {
    let mut sum = Summation::new(cfg);
    let mut coeff = Dd::from(1.0);
    let mut weight = Dd::from(checked_weight(w, shift)?);
    let stepping = weight.hi != 0.0 && w.step != Step::None;
    for r in 0.. {
        let alpha = r as f64 + shift;
        if r > 0 && !stepping {
            weight = Dd::from(checked_weight(w, alpha)?);
        }
        let term = weight * coeff;
        if !term.hi.is_finite() {
            return Err(Error::Overflow(format!("umbral series term {r} is not finite")));
        }
        if sum.push(term) {
            break;
        }
        coeff = coeff * z * factor(r);
        if stepping {
            if let Some(ratio) = w.step.ratio(alpha) {
                weight *= ratio;
            }
        }
    }
    require_converged(sum.finish())
}

/// Resolves the exponential image `ŵ^shift e^{ŵ z}`:
/// `Σ_{r≥0} w(r + shift) z^r / r!`.
pub fn umbral_exp(w: &UmbralWeight, z: f64, shift: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    resolve(w, z, shift, cfg, |r| 1.0 / (r + 1) as f64)
}

/// Resolves the rational image `ŵ^shift / (1 - ŵ z)`:
/// `Σ_{r≥0} w(r + shift) z^r`.
///
/// With the Gauss weight and `z = -x²` this is the Lorentzian image of the
/// Gaussian, `1/(1 + ĉx²) φ₀ = e^{-x²}`.
pub fn umbral_geometric(
    w: &UmbralWeight,
    z: f64,
    shift: f64,
    cfg: &EvalConfig,
) -> Result<SeriesResult> {
    resolve(w, z, shift, cfg, |_| 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_at_zero() {
        assert_eq!(UmbralWeight::gauss().eval(0.0), 1.0);
        assert_eq!(UmbralWeight::pochhammer(0.3, 1.7).eval(0.0), 1.0);
        assert_eq!(UmbralWeight::quasi(3).eval(0.0), 1.0);
        assert_eq!(UmbralWeight::levy().eval(0.0), 0.0);
    }

    #[test]
    fn weight_values() {
        let g = UmbralWeight::gauss();
        assert!((g.eval(0.5) - 2.0 / std::f64::consts::PI.sqrt()).abs() < 1e-15);
        assert_eq!(g.eval(-1.0), 0.0);
        assert!((UmbralWeight::pochhammer(0.5, 1.5).eval(2.0) - 0.2).abs() < 1e-16);
        assert!(UmbralWeight::pochhammer(0.5, 1.5).eval(0.5).is_nan());
        let lv = UmbralWeight::levy().rescaled(0.5);
        assert!((lv.eval(1.0) - gamma(1.5).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn gauss_exponential_image() {
        let cfg = EvalConfig::default();
        let w = UmbralWeight::gauss();
        assert_eq!(umbral_exp(&w, 0.0, 0.0, &cfg).unwrap().value, 1.0);
        // e^{ĉz}φ₀ = Σ z^r/(r!)² = I₀(2√z); at z = -1 that is J₀(2)
        let r = umbral_exp(&w, -1.0, 0.0, &cfg).unwrap();
        assert!((r.value - 0.223_890_779_141_235_67).abs() < 1e-12);
        assert!(r.err_estimate < 1e-12);
        // the Gaussian itself is the rational image
        let g = umbral_geometric(&w, -1.0, 0.0, &cfg).unwrap();
        assert!((g.value - (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn stepped_and_pointwise_weights_agree() {
        let cfg = EvalConfig::default();
        let stepped = UmbralWeight::gauss();
        let inner = stepped.weight.clone();
        let pointwise = UmbralWeight::new(move |a| inner(a), "copy");
        for &shift in &[0.0, 0.5, 1.5] {
            let a = umbral_geometric(&stepped, -2.0, shift, &cfg).unwrap().value;
            let b = umbral_geometric(&pointwise, -2.0, shift, &cfg).unwrap().value;
            assert!((a - b).abs() < 1e-12, "shift {shift}: {a} vs {b}");
        }
    }

    #[test]
    fn pole_at_shift_falls_back_to_pointwise() {
        // shift -2: weights 0, 0, 1/0!, 1/1!, ... so Σ w(r-2) z^r = z² e^{z}
        let cfg = EvalConfig::default();
        let r = umbral_geometric(&UmbralWeight::gauss(), -0.5, -2.0, &cfg).unwrap();
        assert!((r.value - 0.25 * (-0.5f64).exp()).abs() < 1e-13);
    }

    #[test]
    fn gauss_rational_image_is_gaussian() {
        // 1/(1 + ĉ x²) φ₀ = e^{-x²}
        let cfg = EvalConfig::default();
        let w = UmbralWeight::gauss();
        for &x in &[0.0, 0.3, 1.0, 2.5] {
            let r = umbral_geometric(&w, -x * x, 0.0, &cfg).unwrap();
            assert!((r.value - (-x * x).exp()).abs() < 1e-13, "x = {x}");
        }
    }

    #[test]
    fn pochhammer_image_is_1f1() {
        // (1)_n/(1)_n = 1 so the image is e^z
        let cfg = EvalConfig::default();
        let r = umbral_exp(&UmbralWeight::pochhammer(1.0, 1.0), 0.7, 0.0, &cfg).unwrap();
        assert!((r.value - 0.7f64.exp()).abs() < 1e-14);
    }

    #[test]
    fn divergent_image_reports_convergence_error() {
        let cfg = EvalConfig::default();
        // quasi weight with n = 1 is Σ (-z)^r: radius of convergence 1
        let err = umbral_exp(&UmbralWeight::quasi(1), -1.5, 0.0, &cfg).unwrap_err();
        assert!(matches!(err, Error::Convergence { .. } | Error::Overflow(_)));
    }
}
