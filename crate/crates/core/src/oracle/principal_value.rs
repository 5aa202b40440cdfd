//! Cauchy principal value through a simple pole.

use super::gauss_kronrod::{adaptive_quad, QuadResult};
use crate::config::EvalConfig;
use crate::error::{Error, Result};

/// Excision radii, largest first.
pub const EXCISIONS: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// `𝒫∫_{x0-window}^{x0+window} g(ξ)/(ξ - x0) dξ` for `g` smooth near `x0`.
///
/// The integrand is given through its numerator `g`: with the pole written
/// out, `ξ - x0` is never formed in floating point, which would otherwise
/// inject noise of size `ε_mach/t²` at distance `t` from the pole. The two
/// sides are folded onto `t = |ξ - x0|`, so each excised integral
/// `∫_ε^window [g(x0+t) - g(x0-t)]/t dt` has a regular integrand. The excised
/// values are a smooth function of ε and are extrapolated to ε = 0 by
/// polynomial (Neville) extrapolation. The error estimate is the change
/// between the last two extrapolants plus the quadrature errors.
pub fn principal_value_quad<G: Fn(f64) -> f64>(
    g: G,
    x0: f64,
    window: f64,
    cfg: &EvalConfig,
) -> Result<QuadResult> {
    if !(window > EXCISIONS[0] && window.is_finite() && x0.is_finite()) {
        return Err(Error::Domain(format!(
            "principal value needs finite x0 and window > {}, got x0 = {x0}, window = {window}",
            EXCISIONS[0]
        )));
    }
    let folded = |t: f64| (g(x0 + t) - g(x0 - t)) / t;
    // the common piece [ε₀, window] is shared by every excision
    let outer = adaptive_quad(folded, EXCISIONS[0], window, cfg)?;
    let mut evaluations = outer.evaluations;
    let mut quad_err = outer.err_estimate;
    let mut values = Vec::with_capacity(EXCISIONS.len());
    let mut inner_sum = 0.0;
    values.push(outer.value);
    for w in EXCISIONS.windows(2) {
        let piece = adaptive_quad(folded, w[1], w[0], cfg)?;
        inner_sum += piece.value;
        evaluations += piece.evaluations;
        quad_err += piece.err_estimate;
        values.push(outer.value + inner_sum);
    }
    let table = neville_to_zero(&EXCISIONS, &values);
    let value = table[table.len() - 1];
    let extrapolation_err = (value - table[table.len() - 2]).abs();
    Ok(QuadResult {
        value,
        err_estimate: extrapolation_err + quad_err,
        evaluations,
        converged: true,
    })
}

/// Entry `k` is the value at 0 of the polynomial interpolating the last
/// `k + 1` points `(xs[i], ys[i])`.
fn neville_to_zero(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let mut p = ys.to_vec();
    let mut out = vec![ys[n - 1]];
    // after round k, p[i] interpolates points i-k..=i
    for k in 1..n {
        for i in (k..n).rev() {
            p[i] = (xs[i] * p[i - 1] - xs[i - k] * p[i]) / (xs[i] - xs[i - k]);
        }
        out.push(p[n - 1]);
    }
    out
}
