use serde::{Deserialize, Serialize};
use super::dd::Dd;

use crate::config::EvalConfig;
use crate::error::{Error, Result};

/// Outcome of a truncated series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub value: f64,
    /// Twice the magnitude of the last term that was added.
    pub err_estimate: f64,
    pub terms_used: usize,
    pub converged: bool,
}

impl SeriesResult {
    pub(crate) fn exact(value: f64) -> Self {
        SeriesResult {
            value,
            err_estimate: 0.0,
            terms_used: 1,
            converged: true,
        }
    }

    /// Multiplies value and error estimate by a constant factor.
    pub fn scaled(self, factor: f64) -> Self {
        SeriesResult {
            value: self.value * factor,
            err_estimate: self.err_estimate * factor.abs(),
            ..self
        }
    }
}

/// Partial-sum accumulator carrying a double-double running sum.
///
/// Stops once two consecutive terms satisfy `2|t| <= max(abs_tol, rel_tol |S|)`.
/// Leading zero terms (vanishing weights) do not count toward the stop rule
/// until eight terms have been seen.
pub(crate) struct Summation<'a> {
    cfg: &'a EvalConfig,
    sum: Dd,
    terms: usize,
    small_run: usize,
    seen_nonzero: bool,
    last: f64,
    peak: f64,
    done: bool,
}

impl<'a> Summation<'a> {
    pub fn new(cfg: &'a EvalConfig) -> Self {
        Summation {
            cfg,
            sum: Dd::from(0.0),
            terms: 0,
            small_run: 0,
            seen_nonzero: false,
            last: 0.0,
            peak: 0.0,
            done: false,
        }
    }

    /// Adds one term. Returns `true` when the series should stop.
    pub fn push(&mut self, term: Dd) -> bool {
        self.sum += term;
        self.terms += 1;
        let mag = term.hi.abs();
        self.last = mag;
        self.peak = self.peak.max(mag);
        if mag != 0.0 {
            self.seen_nonzero = true;
        }
        if 2.0 * mag <= self.cfg.series_tol(self.sum.hi) {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        let armed = self.seen_nonzero || self.terms >= 8;
        self.done = armed && self.small_run >= 2;
        self.done || self.terms >= self.cfg.max_terms
    }

    #[cfg(test)]
    pub fn push_f64(&mut self, term: f64) -> bool {
        self.push(Dd::from(term))
    }

    /// Largest term magnitude seen so far (a cancellation proxy).
    pub fn peak(&self) -> f64 {
        self.peak
    }

    pub fn finish(self) -> SeriesResult {
        SeriesResult {
            value: self.sum.hi + self.sum.lo,
            err_estimate: 2.0 * self.last,
            terms_used: self.terms,
            converged: self.done,
        }
    }
}

/// Converts a non-converged result into a `Convergence` error.
pub(crate) fn require_converged(r: SeriesResult) -> Result<SeriesResult> {
    if r.converged {
        Ok(r)
    } else {
        Err(Error::Convergence {
            terms: r.terms_used,
            last_term: r.err_estimate / 2.0,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_converges() {
        let cfg = EvalConfig::default();
        let mut s = Summation::new(&cfg);
        let mut t = 1.0;
        while !s.push_f64(t) {
            t *= 0.5;
        }
        let r = s.finish();
        assert!(r.converged);
        assert!((r.value - 2.0).abs() <= r.err_estimate.max(1e-15));
        assert!(r.err_estimate <= cfg.series_tol(r.value));
    }

    #[test]
    fn exhaustion_is_not_convergence() {
        let cfg = EvalConfig::default().with_max_terms(10);
        let mut s = Summation::new(&cfg);
        while !s.push_f64(1.0) {}
        let r = s.finish();
        assert!(!r.converged);
        assert_eq!(r.terms_used, 10);
        assert!(require_converged(r).is_err());
    }

    #[test]
    fn leading_zeros_do_not_stop_early() {
        let cfg = EvalConfig::default();
        let mut s = Summation::new(&cfg);
        let terms = [0.0, 0.0, 0.0, 1.0, 0.5, 0.25];
        let mut stopped_at = None;
        for (k, t) in terms.iter().enumerate() {
            if s.push_f64(*t) {
                stopped_at = Some(k);
                break;
            }
        }
        assert_eq!(stopped_at, None);
    }
}
