//! Dawson's integral `F(x) = e^{-x²} ∫₀ˣ e^{y²} dy` and `erfi`.

use std::f64::consts::PI;

use super::dd::Dd;

use super::series::{require_converged, Summation};
use crate::config::EvalConfig;
use crate::error::{Error, Result};

/// Crossover between the Maclaurin series and the continued fraction.
pub const DAWSON_SERIES_LIMIT: f64 = 4.0;

/// Largest |x| for which `erfi` is finite in binary64.
pub const ERFI_LIMIT: f64 = 26.0;

/// Dawson's integral. Odd in x.
///
/// For |x| ≤ 4 the alternating series `Σ (-1)ⁿ 2ⁿ x^{2n+1}/(2n+1)!!` is summed
/// with a double-double accumulator (its terms peak near 10⁶ at x = 4). Beyond
/// that the J-fraction
/// `F(x) = x/(1+2x² - 4x²/(3+2x² - 8x²/(5+2x² - ...)))` is evaluated by the
/// modified Lentz method.
pub fn dawson(x: f64, cfg: &EvalConfig) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("dawson requires finite x, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x < 0.0 {
        return dawson(-x, cfg).map(|v| -v);
    }
    if x <= DAWSON_SERIES_LIMIT {
        dawson_series(x, cfg)
    } else if x > 1e7 {
        // two asymptotic terms are exact in binary64 here; keeps x² finite
        Ok((1.0 + 0.5 / (x * x)) / (2.0 * x))
    } else {
        dawson_continued_fraction(x, cfg)
    }
}

fn dawson_series(x: f64, cfg: &EvalConfig) -> Result<f64> {
    let step = Dd::new_mul(x, x) * -2.0;
    let mut term = Dd::from(x);
    let mut sum = Summation::new(cfg);
    for n in 0.. {
        if sum.push(term) {
            break;
        }
        term = term * step / (2 * n + 3) as f64;
    }
    Ok(require_converged(sum.finish())?.value)
}

fn dawson_continued_fraction(x: f64, cfg: &EvalConfig) -> Result<f64> {
    const TINY: f64 = 1e-300;
    let x2 = x * x;
    // f = b0 - a1/(b1 - a2/(b2 - ...)), b_k = 2k+1+2x², a_k = 4k x²
    let mut f = 1.0 + 2.0 * x2;
    let mut c = f;
    let mut d = 0.0;
    for k in 1..=cfg.max_terms {
        let a = -4.0 * k as f64 * x2;
        let b = (2 * k + 1) as f64 + 2.0 * x2;
        d = b + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() <= 4.0 * f64::EPSILON {
            return Ok(x / f);
        }
    }
    Err(Error::Convergence {
        terms: cfg.max_terms,
        last_term: f64::NAN,
    })
}

/// Imaginary error function, `erfi(x) = (2/√π) e^{x²} F(x)`, for |x| ≤ 26.
pub fn erfi(x: f64, cfg: &EvalConfig) -> Result<f64> {
    if x.abs() > ERFI_LIMIT || x.is_nan() {
        return Err(Error::Overflow(format!("erfi({x}) exceeds the |x| <= {ERFI_LIMIT} guard")));
    }
    Ok(2.0 / PI.sqrt() * (x * x).exp() * dawson(x, cfg)?)
}
