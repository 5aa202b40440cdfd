/// Two-variable Hermite polynomial
/// `H_n(x, y) = n! Σ_{r ≤ n/2} x^{n-2r} y^r / ((n-2r)! r!)`,
/// with generating function `Σ t^n/n! H_n(x, y) = exp(x t + y t²)`.
///
/// The integer coefficients `n!/((n-2r)! r!)` are built by exact recurrence,
/// so the sum is exact up to the rounding of the monomials.
pub fn hermite_two_var(n: u32, x: f64, y: f64) -> f64 {
    let n = n as i32;
    let mut coef = 1.0;
    let mut sum = 0.0;
    let mut r = 0;
    while 2 * r <= n {
        sum += coef * x.powi(n - 2 * r) * y.powi(r);
        coef *= ((n - 2 * r) * (n - 2 * r - 1)) as f64 / (r + 1) as f64;
        r += 1;
    }
    sum
}

/// Physicists' Hermite polynomial, `H_n(x) e^{-x²} = (-1)^n dⁿ/dxⁿ e^{-x²}`.
///
/// Evaluated as `H_n(2x, -1)`.
pub fn hermite_classical(n: u32, x: f64) -> f64 {
    hermite_two_var(n, 2.0 * x, -1.0)
}
