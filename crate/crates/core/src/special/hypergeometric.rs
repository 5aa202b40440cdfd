//! Generalized hypergeometric series `pFq` summed in double-double.
//!
//! Parameters enter the term ratio through exact double-double sums `a + n`, so
//! the only rounding that survives is that of the accumulator itself. This
//! matters for the Fresnel images, whose terms peak near 10¹¹ at x = 4.

use super::dd::Dd;

use super::gamma::{gamma, pochhammer};
use super::series::{require_converged, SeriesResult, Summation};
use crate::config::EvalConfig;
use crate::error::{domain, Error, Result};

/// Below this argument `₁F₁` switches to Kummer's transformation.
pub const KUMMER_THRESHOLD: f64 = -30.0;

fn check_lower(params: &[f64]) -> Result<()> {
    for &c in params {
        if c <= 0.0 && c == c.floor() {
            return Err(Error::Pole(c));
        }
    }
    Ok(())
}

pub(crate) fn pfq(upper: &[f64], lower: &[f64], z: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    if !z.is_finite() {
        return Err(domain(format!("hypergeometric argument must be finite, got {z}")));
    }
    check_lower(lower)?;
    if z == 0.0 {
        return Ok(SeriesResult::exact(1.0));
    }
    let zz = Dd::from(z);
    let mut term = Dd::from(1.0);
    let mut sum = Summation::new(cfg);
    for n in 0.. {
        if sum.push(term) {
            break;
        }
        let k = n as f64;
        let mut ratio = zz / (k + 1.0);
        for &a in upper {
            ratio *= Dd::new_add(a, k);
        }
        for &b in lower {
            ratio /= Dd::new_add(b, k);
        }
        term *= ratio;
        if !term.hi.is_finite() {
            return Err(Error::Overflow(format!("hypergeometric term {n} overflowed")));
        }
    }
    require_converged(sum.finish())
}

/// Confluent hypergeometric `₁F₁(a; c; x) = Σ (a)_n xⁿ / ((c)_n n!)`.
///
/// Arguments below [`KUMMER_THRESHOLD`] go through
/// `₁F₁(a; c; x) = eˣ ₁F₁(c-a; c; -x)`.
pub fn hyp1f1(a: f64, c: f64, x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    check_lower(&[c])?;
    let terminating = a <= 0.0 && a == a.floor();
    if x < KUMMER_THRESHOLD && !terminating {
        let scale = x.exp();
        return pfq(&[c - a], &[c], -x, cfg).map(|r| r.scaled(scale));
    }
    pfq(&[a], &[c], x, cfg)
}

/// Gauss hypergeometric `₂F₁(a, b; c; x)` for |x| < 1, and at x = 1 through
/// Gauss's summation `Γ(c)Γ(c-a-b)/(Γ(c-a)Γ(c-b))` when `c - a - b > 0`.
pub fn hyp2f1(a: f64, b: f64, c: f64, x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    check_lower(&[c])?;
    if x == 1.0 {
        let s = c - a - b;
        if s <= 0.0 {
            return Err(domain(format!("2F1 diverges at x = 1 with c - a - b = {s}")));
        }
        let value = gamma(c)? * gamma(s)? / (gamma(c - a)? * gamma(c - b)?);
        return Ok(SeriesResult::exact(value));
    }
    if !(x.abs() < 1.0) {
        return Err(domain(format!("2F1 series needs |x| < 1, got {x}")));
    }
    pfq(&[a, b], &[c], x, cfg)
}

/// `₁F₂(a; b, c; x)`, an entire function of x.
pub fn hyp1f2(a: f64, b: f64, c: f64, x: f64, cfg: &EvalConfig) -> Result<SeriesResult> {
    pfq(&[a], &[b, c], x, cfg)
}

/// s-th derivative of `₁F₁(a; c; x)` in x:
/// `((a)_s/(c)_s) ₁F₁(a+s; c+s; x)`.
pub fn hyp1f1_derivative(s: u32, a: f64, c: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let s = f64::from(s);
    check_lower(&[c, c + s])?;
    let ratio = pochhammer(a, s)? / pochhammer(c, s)?;
    Ok(ratio * hyp1f1(a + s, c + s, x, cfg)?.value)
}
