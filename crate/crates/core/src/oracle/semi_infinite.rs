//! Integrals over `[0, ∞)` and over the whole real line.

use super::gauss_kronrod::{adaptive_quad, QuadResult};
use crate::config::EvalConfig;
use crate::error::{Error, Result};

/// Change of variables used for the tail `[s*, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailMap {
    /// `s = s* − ln u`, `u ∈ (0, 1]`. Suited to `e^{-s}`-type decay.
    #[default]
    Exponential,
    /// `s = s* + (1 − t)/t`, `t ∈ (0, 1]`. Suited to algebraic decay `s^{-p}`, `p > 1`.
    Rational,
}

/// Split point and tail treatment for [`semi_infinite_quad_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiInfinite {
    pub split: f64,
    pub tail: TailMap,
    /// Expected decay rate λ of an `e^{-λs}` tail; the exponential map becomes
    /// `s = s* − ln(u)/λ`, which keeps the mapped integrand bounded.
    pub rate: f64,
}

impl Default for SemiInfinite {
    fn default() -> Self {
        SemiInfinite {
            split: 50.0,
            tail: TailMap::Exponential,
            rate: 1.0,
        }
    }
}

impl SemiInfinite {
    pub fn rational() -> Self {
        SemiInfinite {
            tail: TailMap::Rational,
            ..Self::default()
        }
    }

    pub fn with_split(mut self, split: f64) -> Self {
        self.split = split;
        self
    }

    pub fn with_rate(mut self, rate: f64) -> Self {
        self.rate = rate;
        self
    }
}

/// `∫₀^∞ f(s) ds` with the default split `s* = 50` and exponential tail map.
pub fn semi_infinite_quad<F: Fn(f64) -> f64>(f: F, cfg: &EvalConfig) -> Result<QuadResult> {
    semi_infinite_quad_with(f, SemiInfinite::default(), cfg)
}

/// `∫₀^∞ f(s) ds` as `∫₀^{s*}` plus a mapped tail.
///
/// Before integrating the tail, `|f|` is sampled at `s*·{1, 2, 4, 8}`; if it
/// grows across the samples the integral is refused with `Error::Tail`.
pub fn semi_infinite_quad_with<F: Fn(f64) -> f64>(
    f: F,
    opts: SemiInfinite,
    cfg: &EvalConfig,
) -> Result<QuadResult> {
    let split = opts.split;
    if !(split > 0.0 && split.is_finite()) {
        return Err(Error::Domain(format!("split point must be positive, got {split}")));
    }
    let rate = opts.rate;
    if !(rate > 0.0 && rate.is_finite()) {
        return Err(Error::Domain(format!("tail decay rate must be positive, got {rate}")));
    }
    check_decay(&f, split)?;
    let head = adaptive_quad(&f, 0.0, split, cfg)?;
    let tail = match opts.tail {
        TailMap::Exponential => adaptive_quad(
            |u: f64| {
                if u <= 0.0 {
                    return 0.0;
                }
                let s = split - u.ln() / rate;
                guard(f(s)) / (rate * u)
            },
            0.0,
            1.0,
            cfg,
        )?,
        TailMap::Rational => adaptive_quad(
            |t: f64| {
                if t <= 0.0 {
                    return 0.0;
                }
                let s = split + (1.0 - t) / t;
                guard(f(s)) / (t * t)
            },
            0.0,
            1.0,
            cfg,
        )?,
    };
    Ok(head.combine(tail))
}

/// `∫_{-∞}^{∞} f(x) dx` as two half-line integrals.
pub fn whole_line_quad<F: Fn(f64) -> f64>(f: F, opts: SemiInfinite, cfg: &EvalConfig) -> Result<QuadResult> {
    let right = semi_infinite_quad_with(&f, opts, cfg)?;
    let left = semi_infinite_quad_with(|x| f(-x), opts, cfg)?;
    Ok(right.combine(left))
}

// far out in a mapped tail an integrand may produce 0·∞; its true value is 0
fn guard(v: f64) -> f64 {
    if v.is_nan() {
        0.0
    } else {
        v
    }
}

fn check_decay<F: Fn(f64) -> f64>(f: &F, split: f64) -> Result<()> {
    let samples: Vec<f64> = [1.0, 2.0, 4.0, 8.0].iter().map(|k| guard(f(k * split)).abs()).collect();
    let growing = samples.windows(2).all(|w| w[1] > w[0]) && samples[3] > 0.0;
    if growing || samples.iter().any(|v| v.is_infinite()) {
        return Err(Error::Tail { split });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn exponential_integrals() {
        let cfg = EvalConfig::default();
        let r = semi_infinite_quad(|s| (-s).exp(), &cfg).unwrap();
        assert!((r.value - 1.0).abs() < 1e-13);
        let r = semi_infinite_quad(|s| (-s).exp() * s.sqrt(), &cfg).unwrap();
        assert!((r.value - PI.sqrt() / 2.0).abs() < 1e-10);
    }

    #[test]
    fn algebraic_tail_with_rational_map() {
        // ∫₀^∞ ds/(1+s²) = π/2
        let cfg = EvalConfig::default();
        let r = semi_infinite_quad_with(|s| 1.0 / (1.0 + s * s), SemiInfinite::rational(), &cfg).unwrap();
        assert!((r.value - PI / 2.0).abs() < 1e-11);
    }

    #[test]
    fn slow_exponential_tail_with_rate() {
        let cfg = EvalConfig::default();
        let opts = SemiInfinite::default().with_rate(0.05);
        let r = semi_infinite_quad_with(|s| (-0.05 * s).exp(), opts, &cfg).unwrap();
        assert!((r.value - 20.0).abs() < 1e-9);
    }

    #[test]
    fn growing_integrand_is_refused() {
        let cfg = EvalConfig::default();
        let r = semi_infinite_quad(|s| s, &cfg);
        assert!(matches!(r, Err(Error::Tail { .. })));
    }

    #[test]
    fn whole_line_gaussian() {
        let cfg = EvalConfig::default();
        let r = whole_line_quad(|x| (-(x - 0.3) * (x - 0.3)).exp(), SemiInfinite::default(), &cfg).unwrap();
        assert!((r.value - PI.sqrt()).abs() < 1e-12);
    }
}
