//! Euler gamma, its logarithm, and the Pochhammer symbol.
//!
//! Γ uses the g = 7, n = 9 Lanczos approximation with the reflection formula
//! for arguments below 1/2. Integer arguments up to 23 come from an exact
//! factorial table.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// `FACTORIAL[k] = k!`, exact in binary64 for every entry.
const FACTORIAL: [f64; 23] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
    51090942171709440000.0,
    1124000727777607680000.0,
];

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// `sin(πx)` with exact zeros at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    if x == x.floor() {
        return 0.0;
    }
    // fold r in [0, 2) onto [-1/2, 1/2]
    let r = x.rem_euclid(2.0);
    let arg = if r <= 0.5 {
        r
    } else if r <= 1.5 {
        1.0 - r
    } else {
        r - 2.0
    };
    (PI * arg).sin()
}

fn lanczos_sum(xm1: f64) -> f64 {
    let mut a = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (xm1 + i as f64);
    }
    a
}

/// Γ(x) for x ≥ 1/2.
fn gamma_lanczos(x: f64) -> f64 {
    let xm1 = x - 1.0;
    let t = xm1 + LANCZOS_G + 0.5;
    let a = lanczos_sum(xm1);
    // split the power so t^(x-1/2) does not overflow before e^{-t} is applied
    let half = t.powf(0.5 * (xm1 + 0.5));
    (2.0 * PI).sqrt() * half * (-t).exp() * half * a
}

/// Euler's Γ(x). Fails with [`Error::Pole`] at non-positive integers.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(domain("gamma of NaN"));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x == x.floor() && x <= FACTORIAL.len() as f64 {
        return Ok(FACTORIAL[x as usize - 1]);
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let g = gamma_lanczos(1.0 - x);
        return Ok(PI / (s * g));
    }
    if x > 171.7 {
        return Ok(f64::INFINITY);
    }
    Ok(gamma_lanczos(x))
}

/// ln|Γ(x)| together with the sign of Γ(x).
pub fn ln_gamma(x: f64) -> Result<(f64, f64)> {
    if x.is_nan() {
        return Err(domain("ln_gamma of NaN"));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let (lg, _) = ln_gamma(1.0 - x)?;
        return Ok((PI.ln() - s.abs().ln() - lg, s.signum()));
    }
    let xm1 = x - 1.0;
    let t = xm1 + LANCZOS_G + 0.5;
    let lg = LN_SQRT_2PI + (xm1 + 0.5) * t.ln() - t + lanczos_sum(xm1).ln();
    Ok((lg, 1.0))
}

/// Pochhammer symbol (y)_r.
///
/// Integer orders use the product `y(y+1)...(y+r-1)` (or its reciprocal
/// counterpart for negative r); other orders use Γ(y+r)/Γ(y), switching to
/// log-gamma when either factor would overflow.
pub fn pochhammer(y: f64, r: f64) -> Result<f64> {
    if y.is_nan() || r.is_nan() {
        return Err(domain("pochhammer of NaN"));
    }
    if r == r.floor() && r.abs() <= 1024.0 {
        let n = r.abs() as usize;
        if r >= 0.0 {
            return Ok((0..n).map(|k| y + k as f64).product());
        }
        let mut p = 1.0;
        for k in 1..=n {
            let f = y - k as f64;
            if f == 0.0 {
                return Err(Error::Pole(y - k as f64));
            }
            p /= f;
        }
        return Ok(p);
    }
    if is_nonpositive_integer(y + r) {
        return Err(Error::Pole(y + r));
    }
    if is_nonpositive_integer(y) {
        return Err(Error::Pole(y));
    }
    if (y + r).abs() < 160.0 && y.abs() < 160.0 {
        return Ok(gamma(y + r)? / gamma(y)?);
    }
    let (num, sn) = ln_gamma(y + r)?;
    let (den, sd) = ln_gamma(y)?;
    Ok(sn * sd * (num - den).exp())
}
