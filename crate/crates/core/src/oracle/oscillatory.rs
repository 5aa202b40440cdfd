//! Slowly convergent oscillatory tails: integrate between consecutive zeros,
//! then accelerate the partial sums with Wynn's epsilon algorithm.

use super::gauss_kronrod::{adaptive_quad, quad_error, QuadResult};
use crate::config::EvalConfig;
use crate::error::{Error, Result};

/// Largest number of between-zero pieces summed before giving up.
pub const MAX_PIECES: usize = 400;

/// `∫_a^∞ f(s) ds` for an oscillating `f` whose sign changes at the
/// increasing nodes `zero(0) < zero(1) < ...`, all greater than `a`.
///
/// The piecewise integrals form an alternating sequence of partial sums;
/// the limit is read off the epsilon table once two successive extrapolants
/// agree to `max(abs_tol, quad_rel_tol·|value|)`.
pub fn oscillatory_tail_quad<F, Z>(f: F, a: f64, zero: Z, cfg: &EvalConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
    Z: Fn(usize) -> f64,
{
    let first = zero(0);
    if !(first > a) {
        return Err(Error::Domain(format!("first node {first} must lie above {a}")));
    }
    let head = adaptive_quad(&f, a, first, cfg)?;
    let mut evaluations = head.evaluations;
    let mut quad_err = head.err_estimate;
    let mut partial = head.value;
    let mut wynn = Wynn::default();
    wynn.push(partial);
    let mut previous: Option<f64> = None;
    let mut lo = first;
    for k in 1..=MAX_PIECES {
        let hi = zero(k);
        let piece = adaptive_quad(&f, lo, hi, cfg)?;
        evaluations += piece.evaluations;
        quad_err += piece.err_estimate;
        partial += piece.value;
        lo = hi;
        let estimate = wynn.push(partial);
        if let Some(prev) = previous {
            let change = (estimate - prev).abs();
            if k >= 6 && change <= cfg.quad_tol(estimate) {
                return Ok(QuadResult {
                    value: estimate,
                    err_estimate: change + quad_err,
                    evaluations,
                    converged: true,
                });
            }
        }
        previous = Some(estimate);
    }
    Err(quad_error(QuadResult {
        value: previous.unwrap_or(partial),
        err_estimate: f64::INFINITY,
        evaluations,
        converged: false,
    }))
}

/// Incremental epsilon table. Only the last anti-diagonal is kept.
#[derive(Debug, Default)]
pub(crate) struct Wynn {
    diagonal: Vec<f64>,
}

impl Wynn {
    /// Adds the next partial sum and returns the current best limit estimate
    /// (the highest even column reached).
    pub fn push(&mut self, s: f64) -> f64 {
        let mut next = Vec::with_capacity(self.diagonal.len() + 1);
        next.push(s);
        for (j, &old) in self.diagonal.iter().enumerate() {
            // eps_{j+1}^{(n)} = eps_{j-1}^{(n+1)} + 1/(eps_j^{(n+1)} - eps_j^{(n)})
            let below = if j == 0 { 0.0 } else { self.diagonal[j - 1] };
            let diff = next[j] - old;
            if diff == 0.0 || !diff.is_finite() {
                // the sequence has converged exactly at this order
                break;
            }
            next.push(below + 1.0 / diff);
        }
        self.diagonal = next;
        let even = (self.diagonal.len() - 1) & !1;
        self.diagonal[even]
    }
}
