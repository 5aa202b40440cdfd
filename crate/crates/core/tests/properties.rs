use std::f64::consts::PI;

use proptest::prelude::*;
use umbral_gauss::fresnel::*;
use umbral_gauss::gauss_trig::*;
use umbral_gauss::levy::*;
use umbral_gauss::oracle::adaptive_quad;
use umbral_gauss::quasi_gauss::*;
use umbral_gauss::special::*;
use umbral_gauss::EvalConfig;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

proptest! {
    #[test]
    fn gamma_recurrence(x in 0.05f64..30.0) {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!(((lhs - rhs) / rhs).abs() < 1e-13);
    }

    #[test]
    fn gauss_rational_image(x in -4.0f64..4.0) {
        let r = umbral_geometric(&UmbralWeight::gauss(), -x * x, 0.0, &cfg()).unwrap();
        prop_assert!((r.value - cg(x)).abs() < 1e-12);
    }

    #[test]
    fn trig_parity(x in 0.0f64..10.0) {
        let c = cfg();
        prop_assert_eq!(cg(-x), cg(x));
        prop_assert_eq!(sg(-x, &c).unwrap(), -sg(x, &c).unwrap());
        let a = sg_antiderivative(x.min(6.0), &c).unwrap();
        let b = sg_antiderivative(-x.min(6.0), &c).unwrap();
        prop_assert!((a - b).abs() <= 1e-13 * a.abs().max(1.0));
    }

    #[test]
    fn trig_identity(x in -3.0f64..3.0) {
        let c = cfg();
        let p = GaussTrigPoint::at(x, &c).unwrap();
        let e = 2.0 / PI.sqrt() * adaptive_quad(|t: f64| (t * t).exp(), 0.0, x, &c).unwrap().value;
        prop_assert!((p.norm_sqr() - (-2.0 * x * x).exp() * (1.0 + e * e)).abs() < 1e-10);
    }

    #[test]
    fn sg_series_matches_dawson(x in -3.0f64..3.0) {
        let c = cfg();
        prop_assert!((sg_series(x, &c).unwrap().value - sg(x, &c).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn sg_derivative_matches_finite_differences(m in 1u32..=4, x in -2.0f64..2.0) {
        let c = cfg();
        let h = 1e-3;
        let f = |y: f64| sg_derivative(m - 1, y, &c).unwrap();
        let fd = (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
        prop_assert!((sg_derivative(m, x, &c).unwrap() - fd).abs() < 1e-6);
    }

    #[test]
    fn gauss_primitive_is_scaled_erf(x in -3.0f64..3.0) {
        let s = gauss_primitive_series(x, &cfg()).unwrap().value;
        prop_assert!((s - 0.5 * PI.sqrt() * libm::erf(x)).abs() < 2e-12);
    }

    #[test]
    fn sg_derivative_paths(m in 0u32..=4, x in -2.0f64..2.0) {
        let c = cfg();
        let s = sg_derivative_series(m, x, &c).unwrap().value;
        let r = sg_derivative_recurrence(m, x, &c).unwrap();
        prop_assert!((s - r).abs() < 1e-9);
    }

    #[test]
    fn quasi_gauss_bounded_even_and_decreasing(x in 0.0f64..20.0, n in 1u32..=6) {
        let c = cfg();
        let v = quasi_gauss(x, n, &c).unwrap();
        prop_assert!(v > 0.0 && v <= 1.0);
        prop_assert_eq!(quasi_gauss(-x, n, &c).unwrap(), v);
        prop_assert!(quasi_gauss(x + 0.1, n, &c).unwrap() < v);
    }

    #[test]
    fn quasi_gauss_jensen_bound(x in 0.0f64..6.0, n in 1u32..=6) {
        // E[e^{-x² S^{1/n}}] ≥ e^{-x² E[S^{1/n}]} for S ~ Exp(1)
        let c = cfg();
        let v = quasi_gauss(x, n, &c).unwrap();
        let g = gamma(1.0 + 1.0 / f64::from(n)).unwrap();
        prop_assert!(v >= (-x * x * g).exp() - 1e-14);
    }

    #[test]
    fn hermite_generating_function(x in -2.0f64..2.0, y in -2.0f64..2.0, t in -0.5f64..0.5) {
        let mut sum = 0.0;
        let mut coef = 1.0;
        for k in 0..=40u32 {
            sum += coef * hermite_two_var(k, x, y);
            coef *= t / f64::from(k + 1);
        }
        let e = (x * t + y * t * t).exp();
        prop_assert!(((sum - e) / e).abs() < 1e-12);
    }

    #[test]
    fn fresnel_odd_and_derivative(x in 0.05f64..4.0) {
        let c = cfg();
        prop_assert_eq!(fresnel_c(-x, &c).unwrap(), -fresnel_c(x, &c).unwrap());
        prop_assert_eq!(fresnel_s(-x, &c).unwrap(), -fresnel_s(x, &c).unwrap());
        let h = 1e-4;
        let dc = (fresnel_c(x + h, &c).unwrap() - fresnel_c(x - h, &c).unwrap()) / (2.0 * h);
        let ds = (fresnel_s(x + h, &c).unwrap() - fresnel_s(x - h, &c).unwrap()) / (2.0 * h);
        prop_assert!((dc - (0.5 * PI * x * x).cos()).abs() < 1e-6);
        prop_assert!((ds - (0.5 * PI * x * x).sin()).abs() < 1e-6);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn levy_density_nonnegative(x in 0.01f64..100.0, alpha in 0.1f64..0.9) {
        let g = levy_density(x, LevyParams::stable(alpha).unwrap(), &cfg()).unwrap();
        prop_assert!(g >= -1e-10);
    }

    #[test]
    fn levy_series_and_contour(x in 5.0f64..50.0, alpha in 0.2f64..0.8) {
        let c = cfg();
        let s = levy_density_series(x, alpha, &c).unwrap().value;
        let i = levy_density_integral(x, alpha, &c).unwrap().value;
        prop_assert!(((s - i) / s).abs() < 1e-6);
    }

    #[test]
    fn levy_moment_positive_below_alpha(alpha in 0.1f64..0.95, frac in 0.01f64..0.99) {
        let mu = alpha * frac;
        prop_assert!(levy_moment(mu, alpha).unwrap() > 0.0);
        prop_assert!(levy_moment(alpha + (1.0 - alpha) * frac, alpha).is_err());
    }

    #[test]
    fn moment_finiteness_rule(m in 0u32..12, n in 1u32..8) {
        let p = QuasiGaussParams::new(n, 1.0, 0.0).unwrap();
        let r = moment(m, &p).unwrap();
        let even = 2 * (m / 2);
        prop_assert_eq!(r.finite, f64::from(even + 1) < f64::from(2 * n));
    }
}

/// `(cg, sg)` returns to the origin only like `1/(√π x)`.
#[test]
fn egg_curve_closes_slowly() {
    let c = cfg();
    for x in [50.0f64, 200.0] {
        let p = GaussTrigPoint::at(x, &c).unwrap();
        assert!(p.cg < 1e-300);
        let scaled = p.sg * x * PI.sqrt();
        assert!((scaled - 1.0).abs() < 1.0 / (x * x));
    }
}

/// Truncated moment generating sum at t = 0.3, d = 0.5, n = 3, against
/// quadrature of the same Taylor polynomial of `e^{t(x+d)}`. Orders up to 4
/// converge absolutely; the full exponential does not.
#[test]
fn truncated_moment_generating_sum() {
    let c = cfg();
    let (t, d) = (0.3, 0.5);
    let p = QuasiGaussParams::new(3, 1.0, d).unwrap();
    let mut sum = 0.0;
    let mut coef = 1.0;
    for m in 0..=4u32 {
        sum += coef * moment(m, &p).unwrap().value;
        coef *= t / f64::from(m + 1);
    }
    let poly = |y: f64| {
        let u = t * (y + d);
        1.0 + u + u * u / 2.0 + u.powi(3) / 6.0 + u.powi(4) / 24.0
    };
    let central = QuasiGaussParams::new(3, 1.0, 0.0).unwrap();
    let q = umbral_gauss::oracle::whole_line_quad(
        |y| poly(y) * density(y, &central, &c).unwrap(),
        umbral_gauss::oracle::SemiInfinite::rational(),
        &c,
    )
    .unwrap()
    .value;
    assert!((sum - q).abs() < 1e-6 * sum, "{sum} vs {q}");

    // ∫ e^{t(x+d)} F dx over growing windows does not settle
    let window = |w: f64| {
        umbral_gauss::oracle::adaptive_quad(|y| (t * (y + d)).exp() * density(y, &central, &c).unwrap(), -w, w, &c)
            .unwrap()
            .value
    };
    let (a, b, e) = (window(50.0), window(100.0), window(200.0));
    assert!(b > 10.0 * a && e > 1e6 * b);
}
