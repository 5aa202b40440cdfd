//! Functions reachable from `umbral eval` and `umbral table`.

use serde::{Deserialize, Serialize};
use umbral_gauss::fresnel::{fresnel_c, fresnel_s};
use umbral_gauss::gauss_trig::*;
use umbral_gauss::levy::*;
use umbral_gauss::oracle::QuadResult;
use umbral_gauss::quasi_gauss::*;
use umbral_gauss::special::*;
use umbral_gauss::EvalConfig;

use crate::error::CliError;
use crate::params::Params;

/// Name, parameters, description.
pub const CATALOG: &[(&str, &str, &str)] = &[
    ("cg", "", "Gaussian cosine e^{-x²}"),
    ("sg", "", "Gaussian sine (2/√π) F(x)"),
    ("sg_series", "", "Gaussian sine by its power series"),
    ("eg", "", "C_g(x) + i S_g(x)"),
    ("z", "", "plasma dispersion function i√π E_g(x)"),
    ("dawson", "", "Dawson integral F(x)"),
    ("erfi", "", "imaginary error function"),
    ("cg_derivative", "m", "m-th derivative of C_g"),
    ("sg_derivative", "m", "m-th derivative of S_g"),
    ("sg_antiderivative", "", "∫₀ˣ S_g"),
    ("gauss_primitive", "", "∫₀ˣ C_g"),
    ("kk_residual", "", "Kramers–Kronig residual at x"),
    ("quasi_gauss", "n", "e(-x²|n)"),
    ("quasi_gauss_series", "n", "e(-x²|n) by its power series"),
    ("quasi_gauss_integral_rep", "n", "e(-x²|n) by its Laplace integral"),
    ("quasi_gauss_derivative", "m n", "m-th derivative of e(-x²|n)"),
    ("quasi_exp", "n", "e(z|n) at z = x"),
    ("e_nu", "nu n", "Σ Γ((r+ν)/n+1)(-x²)^r/r!"),
    ("density", "n [sigma=1]", "quasi-Gaussian density F(x; σ|n)"),
    ("levy", "alpha [nu=0]", "one-sided Lévy density g_α, or g_{α,ν}"),
    ("levy_series", "alpha", "g_α by its large-x series"),
    ("levy_integral", "alpha", "g_α by contour quadrature"),
    ("fresnel_c", "", "Fresnel cosine integral C(x)"),
    ("fresnel_s", "", "Fresnel sine integral S(x)"),
    ("gamma", "", "Γ(x)"),
    ("hyp1f1", "a c", "₁F₁(a; c; x)"),
    ("hyp2f1", "a b c", "₂F₁(a, b; c; x), |x| ≤ 1"),
    ("hyp1f2", "a b c", "₁F₂(a; b, c; x)"),
    ("hermite", "n [y=-1]", "two-variable Hermite H_n(x, y)"),
];

/// A value with whatever accuracy bookkeeping its routine reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub function: String,
    pub x: f64,
    pub value: f64,
    /// Imaginary part for complex-valued functions.
    pub imag: Option<f64>,
    pub err_estimate: Option<f64>,
    pub terms_used: Option<usize>,
    pub evaluations: Option<usize>,
}

impl Evaluation {
    fn plain(function: &str, x: f64, value: f64) -> Self {
        Evaluation {
            function: function.to_string(),
            x,
            value,
            imag: None,
            err_estimate: None,
            terms_used: None,
            evaluations: None,
        }
    }

    fn series(function: &str, x: f64, r: SeriesResult) -> Self {
        Evaluation {
            err_estimate: Some(r.err_estimate),
            terms_used: Some(r.terms_used),
            ..Self::plain(function, x, r.value)
        }
    }

    fn quad(function: &str, x: f64, r: QuadResult) -> Self {
        Evaluation {
            err_estimate: Some(r.err_estimate),
            evaluations: Some(r.evaluations),
            ..Self::plain(function, x, r.value)
        }
    }
}

pub fn is_complex(function: &str) -> bool {
    matches!(function, "eg" | "z")
}

pub fn evaluate(function: &str, x: f64, params: &mut Params, cfg: &EvalConfig) -> Result<Evaluation, CliError> {
    let f = function;
    let e = match f {
        "cg" => Evaluation::plain(f, x, cg(x)),
        "sg" => Evaluation::plain(f, x, sg(x, cfg)?),
        "sg_series" => Evaluation::series(f, x, sg_series(x, cfg)?),
        "eg" | "z" => {
            let v = if f == "eg" { eg(x, cfg)? } else { fried_conte_z(x, cfg)? };
            Evaluation {
                imag: Some(v.im),
                ..Evaluation::plain(f, x, v.re)
            }
        }
        "dawson" => Evaluation::plain(f, x, dawson(x, cfg)?),
        "erfi" => Evaluation::plain(f, x, erfi(x, cfg)?),
        "cg_derivative" => Evaluation::plain(f, x, cg_derivative(params.required_count("m")?, x)),
        "sg_derivative" => Evaluation::plain(f, x, sg_derivative(params.required_count("m")?, x, cfg)?),
        "sg_antiderivative" => Evaluation::plain(f, x, sg_antiderivative(x, cfg)?),
        "gauss_primitive" => Evaluation::plain(f, x, gauss_primitive(x, cfg)?),
        "kk_residual" => Evaluation::plain(f, x, kk_residual(x, cfg)?),
        "quasi_gauss" => Evaluation::plain(f, x, quasi_gauss(x, params.required_count("n")?, cfg)?),
        "quasi_gauss_series" => Evaluation::series(f, x, quasi_gauss_series(x, params.required_count("n")?, cfg)?),
        "quasi_gauss_integral_rep" => {
            Evaluation::quad(f, x, quasi_gauss_integral_rep(x, params.required_count("n")?, cfg)?)
        }
        "quasi_gauss_derivative" => {
            let m = params.required_count("m")?;
            let n = params.required_count("n")?;
            Evaluation::plain(f, x, quasi_gauss_derivative(m, x, n, cfg)?)
        }
        "quasi_exp" => Evaluation::plain(f, x, quasi_exp(x, params.required_count("n")?, cfg)?),
        "e_nu" => {
            let nu = params.required_real("nu")?;
            let n = params.required_count("n")?;
            Evaluation::series(f, x, e_nu(x, nu, n, cfg)?)
        }
        "density" => {
            let n = params.required_count("n")?;
            let sigma = params.real_or("sigma", 1.0)?;
            let p = QuasiGaussParams::new(n, sigma, 0.0)?;
            Evaluation::plain(f, x, density(x, &p, cfg)?)
        }
        "levy" => {
            let alpha = params.required_real("alpha")?;
            let nu = params.real_or("nu", 0.0)?;
            let p = LevyParams::new(alpha, nu)?;
            let v = if nu == 0.0 {
                levy_density(x, p, cfg)?
            } else {
                levy_modified_density(x, p, cfg)?
            };
            Evaluation::plain(f, x, v)
        }
        "levy_series" => Evaluation::series(f, x, levy_density_series(x, params.required_real("alpha")?, cfg)?),
        "levy_integral" => Evaluation::quad(f, x, levy_density_integral(x, params.required_real("alpha")?, cfg)?),
        "fresnel_c" => Evaluation::plain(f, x, fresnel_c(x, cfg)?),
        "fresnel_s" => Evaluation::plain(f, x, fresnel_s(x, cfg)?),
        "gamma" => Evaluation::plain(f, x, gamma(x)?),
        "hyp1f1" => {
            let a = params.required_real("a")?;
            let c = params.required_real("c")?;
            Evaluation::series(f, x, hyp1f1(a, c, x, cfg)?)
        }
        "hyp2f1" => {
            let a = params.required_real("a")?;
            let b = params.required_real("b")?;
            let c = params.required_real("c")?;
            Evaluation::series(f, x, hyp2f1(a, b, c, x, cfg)?)
        }
        "hyp1f2" => {
            let a = params.required_real("a")?;
            let b = params.required_real("b")?;
            let c = params.required_real("c")?;
            Evaluation::series(f, x, hyp1f2(a, b, c, x, cfg)?)
        }
        "hermite" => {
            let n = params.required_count("n")?;
            let y = params.real_or("y", -1.0)?;
            Evaluation::plain(f, x, hermite_two_var(n, x, y))
        }
        _ => {
            return Err(CliError::usage(format!(
                "unknown function '{f}'; run `umbral eval --list` for the catalog"
            )))
        }
    };
    Ok(e)
}
