//! `umbral validate`: every identity of the library checked against an
//! independent route, collected into a [`ValidationReport`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use umbral_gauss::fresnel::*;
use umbral_gauss::gauss_trig::*;
use umbral_gauss::levy::*;
use umbral_gauss::oracle::adaptive_quad;
use umbral_gauss::quasi_gauss::*;
use umbral_gauss::special::{dawson, gamma, hyp1f1, hyp2f1};
use umbral_gauss::{EvalConfig, Result};

use crate::output::fmt17;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    GaussTrig,
    QuasiGauss,
    Levy,
    Fresnel,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["gauss-trig", "quasi-gauss", "levy", "fresnel", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::GaussTrig, Suite::QuasiGauss, Suite::Levy, Suite::Fresnel],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "gauss-trig" => Ok(Suite::GaussTrig),
            "quasi-gauss" => Ok(Suite::QuasiGauss),
            "levy" => Ok(Suite::Levy),
            "fresnel" => Ok(Suite::Fresnel),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite '{s}', expected one of {}", Suite::NAMES.join(", "))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            Suite::GaussTrig => 0,
            Suite::QuasiGauss => 1,
            Suite::Levy => 2,
            Suite::Fresnel => 3,
            Suite::All => 4,
        };
        f.write_str(Suite::NAMES[i])
    }
}

/// Which error is compared with the tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Relative,
    /// For checks whose expected value is zero or whose natural scale is
    /// already built into `computed`.
    Absolute,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The identity being tested, written out.
    pub identity: String,
    pub computed: Option<f64>,
    pub expected: Option<f64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub basis: Basis,
    pub tolerance: f64,
    pub pass: bool,
    /// Set when either side failed to evaluate.
    pub error: Option<String>,
}

impl Check {
    fn new(name: String, identity: &str, basis: Basis, tolerance: f64, computed: Result<f64>, expected: Result<f64>) -> Self {
        let mut c = Check {
            name,
            identity: identity.to_string(),
            computed: None,
            expected: None,
            abs_err: None,
            rel_err: None,
            basis,
            tolerance,
            pass: false,
            error: None,
        };
        match (computed, expected) {
            (Ok(v), Ok(e)) if v.is_finite() && e.is_finite() => {
                let abs = (v - e).abs();
                c.computed = Some(v);
                c.expected = Some(e);
                c.abs_err = Some(abs);
                c.rel_err = (e != 0.0).then(|| abs / e.abs());
                let measured = match basis {
                    Basis::Relative => c.rel_err,
                    Basis::Absolute => Some(abs),
                };
                c.pass = measured.is_some_and(|m| m <= tolerance);
            }
            (Ok(v), Ok(e)) => {
                c.error = Some(format!("non-finite value: computed {v}, expected {e}"));
            }
            (Err(err), _) | (Ok(_), Err(err)) => {
                c.error = Some(err.to_string());
            }
        }
        c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Failed checks whose evaluation raised an error.
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub config: EvalConfig,
    /// Upper bound applied to every declared tolerance, when requested.
    pub tolerance_cap: Option<f64>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields are always serializable")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One line per check, then a count.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let opt = |v: Option<f64>| v.map_or_else(|| "-".to_string(), fmt17);
            let err = match c.basis {
                Basis::Relative => c.rel_err,
                Basis::Absolute => c.abs_err,
            };
            out.push_str(&format!(
                "{status} {}: computed {} expected {} {} err {} tol {:.1e}",
                c.name,
                opt(c.computed),
                opt(c.expected),
                match c.basis {
                    Basis::Relative => "rel",
                    Basis::Absolute => "abs",
                },
                opt(err),
                c.tolerance
            ));
            if let Some(e) = &c.error {
                out.push_str(&format!(" [{e}]"));
            }
            out.push('\n');
        }
        let s = self.summary;
        out.push_str(&format!(
            "{}: {} of {} checks passed ({} failed, {} with errors)\n",
            self.suite, s.passed, s.total, s.failed, s.errors
        ));
        out
    }
}

/// Runs a suite. The parts of `all` run on separate threads; the report is
/// sorted by check name, so thread timing never shows in the output.
pub fn run(suite: Suite, cfg: &EvalConfig, tolerance_cap: Option<f64>) -> ValidationReport {
    let mut checks: Vec<Check> = std::thread::scope(|s| {
        let handles: Vec<_> = suite
            .parts()
            .into_iter()
            .map(|part| {
                s.spawn(move || {
                    let mut b = Builder::new(cfg, tolerance_cap);
                    match part {
                        Suite::GaussTrig => gauss_trig_checks(&mut b),
                        Suite::QuasiGauss => quasi_gauss_checks(&mut b),
                        Suite::Levy => levy_checks(&mut b),
                        Suite::Fresnel => fresnel_checks(&mut b),
                        Suite::All => unreachable!(),
                    }
                    b.checks
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("validation thread panicked"))
            .collect()
    });
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = checks.iter().filter(|c| c.pass).count();
    let summary = Summary {
        total: checks.len(),
        passed,
        failed: checks.len() - passed,
        errors: checks.iter().filter(|c| c.error.is_some()).count(),
    };
    ValidationReport {
        suite,
        checks,
        summary,
        config: *cfg,
        tolerance_cap,
    }
}

struct Builder<'a> {
    cfg: &'a EvalConfig,
    cap: Option<f64>,
    checks: Vec<Check>,
}

impl<'a> Builder<'a> {
    fn new(cfg: &'a EvalConfig, cap: Option<f64>) -> Self {
        Builder {
            cfg,
            cap,
            checks: Vec::new(),
        }
    }

    fn tol(&self, declared: f64) -> f64 {
        self.cap.map_or(declared, |c| declared.min(c))
    }

    fn rel(&mut self, name: impl Into<String>, identity: &str, tol: f64, computed: Result<f64>, expected: Result<f64>) {
        let t = self.tol(tol);
        self.checks.push(Check::new(name.into(), identity, Basis::Relative, t, computed, expected));
    }

    fn abs(&mut self, name: impl Into<String>, identity: &str, tol: f64, computed: Result<f64>, expected: Result<f64>) {
        let t = self.tol(tol);
        self.checks.push(Check::new(name.into(), identity, Basis::Absolute, t, computed, expected));
    }

    fn flag(&mut self, name: impl Into<String>, identity: &str, holds: Result<bool>) {
        let v = holds.map(|h| if h { 1.0 } else { 0.0 });
        self.abs(name, identity, 0.0, v, Ok(1.0));
    }
}

fn grid(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| a + (b - a) * i as f64 / (n - 1) as f64)
}

fn max_over(xs: impl Iterator<Item = f64>, mut f: impl FnMut(f64) -> Result<f64>) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for x in xs {
        worst = worst.max(f(x)?);
    }
    Ok(worst)
}

fn five_point(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    Ok((f(x - 2.0 * h)? - 8.0 * f(x - h)? + 8.0 * f(x + h)? - f(x + 2.0 * h)?) / (12.0 * h))
}

fn gauss_trig_checks(b: &mut Builder) {
    let cfg = b.cfg;
    let residual = max_over(grid(-3.0, 3.0, 200), |x| {
        let p = GaussTrigPoint::at(x, cfg)?;
        let e = 2.0 / PI.sqrt() * adaptive_quad(|t| (t * t).exp(), 0.0, x, cfg)?.value;
        Ok((p.norm_sqr() - (-2.0 * x * x).exp() * (1.0 + e * e)).abs())
    });
    b.abs(
        "gauss-trig identity on [-3,3]",
        "C_g² + S_g² = e^{-2x²}(1 + erfi(x)²), erfi by quadrature; max residual",
        1e-10,
        residual,
        Ok(0.0),
    );

    let spread = max_over(grid(-3.0, 3.0, 121), |x| {
        let a = sg(x, cfg)?;
        let d = 2.0 / PI.sqrt() * dawson(x, cfg)?;
        let h = 2.0 / PI.sqrt() * x * (-x * x).exp() * hyp1f1(0.5, 1.5, x * x, cfg)?.value;
        let s = sg_series(x, cfg)?.value;
        Ok((a - d).abs().max((a - h).abs()).max((a - s).abs()))
    });
    b.abs(
        "sg three-way agreement on [-3,3]",
        "S_g = (2/√π) F(x) = (2/√π) x e^{-x²} ₁F₁(1/2; 3/2; x²) = power series; max spread",
        1e-10,
        spread,
        Ok(0.0),
    );

    b.rel(
        "sg over x integral = π",
        "∫_{-∞}^{∞} S_g(x)/x dx = π",
        1e-6,
        sg_over_x_integral(cfg).map(|q| q.value),
        Ok(PI),
    );
    b.rel(
        "2F1(1/2,1/2;3/2;1) = π/2",
        "Gauss summation Γ(c)Γ(c-a-b)/(Γ(c-a)Γ(c-b))",
        1e-12,
        hyp2f1(0.5, 0.5, 1.5, 1.0, cfg).map(|r| r.value),
        Ok(PI / 2.0),
    );
    for alpha in [0.25, 0.5, 0.75] {
        b.rel(
            format!("sg_alpha integral alpha={alpha}"),
            "∫₀^∞ S_g(x, α) dx = ₂F₁(1/2, 1; 3/2; α)/√π",
            1e-7,
            sg_alpha_integral_quadrature(alpha, cfg).map(|q| q.value),
            sg_alpha_integral(alpha, cfg),
        );
    }
    for x in [0.5, 1.0, 2.0] {
        b.abs(
            format!("kramers-kronig x={x}"),
            "principal-value transform of C_g reproduces S_g",
            1e-4,
            kk_residual(x, cfg),
            Ok(0.0),
        );
    }
    let h = 1e-3;
    for m in 1..=4u32 {
        let sg_fd = normalized_fd_error(|y| sg_derivative(m, y, cfg), |y| sg_derivative(m - 1, y, cfg), h);
        b.abs(
            format!("sg_derivative m={m} vs finite differences"),
            "max |exact - five-point FD| / max |exact| on [-2,2]",
            1e-5,
            sg_fd,
            Ok(0.0),
        );
        let cg_fd = normalized_fd_error(|y| Ok(cg_derivative(m, y)), |y| Ok(cg_derivative(m - 1, y)), h);
        b.abs(
            format!("cg_derivative m={m} vs finite differences"),
            "max |exact - five-point FD| / max |exact| on [-2,2]",
            1e-5,
            cg_fd,
            Ok(0.0),
        );
    }
}

fn normalized_fd_error(exact: impl Fn(f64) -> Result<f64>, lower: impl Fn(f64) -> Result<f64>, h: f64) -> Result<f64> {
    let mut err: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for x in grid(-2.0, 2.0, 41) {
        let e = exact(x)?;
        err = err.max((e - five_point(&lower, x, h)?).abs());
        scale = scale.max(e.abs());
    }
    Ok(err / scale)
}

fn quasi_gauss_checks(b: &mut Builder) {
    let cfg = b.cfg;
    b.rel(
        "I_e(1)=π",
        "∫∫ e^{-s} e^{-x² s} ds dx = π (nested quadrature)",
        1e-6,
        quasi_gauss_integral_quadrature(1, cfg).map(|q| q.value),
        Ok(PI),
    );
    for n in 2..=6u32 {
        b.rel(
            format!("I_e({n})"),
            "∫ e(-x²|n) dx = √π Γ(1 - 1/(2n)) (nested quadrature)",
            1e-6,
            quasi_gauss_integral_quadrature(n, cfg).map(|q| q.value),
            gamma(1.0 - 0.5 / f64::from(n)).map(|g| PI.sqrt() * g),
        );
    }
    for alpha in [0.0, 0.5, 1.0] {
        b.rel(
            format!("I(alpha) alpha={alpha}"),
            "∫∫ e^{-s - x² s^α} ds dx = √π Γ(1 - α/2)",
            1e-6,
            i_alpha_quadrature(alpha, cfg).map(|q| q.value),
            i_alpha(alpha),
        );
    }
    let p3 = QuasiGaussParams::new(3, 1.0, 0.0).expect("valid parameters");
    let p2 = QuasiGaussParams::new(2, 1.0, 0.0).expect("valid parameters");
    b.rel("moment M0=1", "M_0 = 1 exactly", 0.0, moment(0, &p3).map(|m| m.value), Ok(1.0));
    b.rel(
        "moment M2 sigma=1 n=3",
        "closed-form M_2 = ∫ x² F(x; 1|3) dx",
        1e-6,
        moment_quadrature(2, &p3, cfg).map(|q| q.value),
        moment(2, &p3).map(|m| m.value),
    );
    b.flag("moment m=5 n=3 finite", "m = 5 moment exists for n = 3", moment(5, &p3).map(|m| m.finite));
    b.flag("moment m=5 n=2 infinite", "m = 5 moment diverges for n = 2", moment(5, &p2).map(|m| !m.finite));
    for n in [1u32, 2, 3] {
        let fact: f64 = (1..=n).map(f64::from).product();
        b.rel(
            format!("tail law n={n}"),
            "e(-x²|n) x^{2n} → n! (x = 30, 5% band)",
            0.05,
            quasi_gauss(30.0, n, cfg).map(|v| v * 30f64.powi(2 * n as i32)),
            Ok(fact),
        );
    }
    for n in [1u32, 2, 3, 5] {
        let top = x_switch(n);
        let steps = ((top - 0.5) / 0.05).floor() as usize + 1;
        let band = max_over((0..steps).map(|i| 0.5 + 0.05 * i as f64), |x| {
            let s = quasi_gauss_series(x, n, cfg)?.value;
            let i = quasi_gauss_integral_rep(x, n, cfg)?.value;
            Ok(((s - i) / i).abs())
        });
        b.abs(
            format!("quasi-gauss series vs integral n={n}"),
            "Σ (-1)^r Γ(r/n+1) x^{2r}/r! = ∫₀^∞ e^{-s} e^{-x² s^{1/n}} ds; max relative gap below the crossover",
            1e-8,
            band,
            Ok(0.0),
        );
    }
}

fn levy_checks(b: &mut Builder) {
    let cfg = b.cfg;
    for alpha in [0.3, 0.5, 0.7] {
        for p in [0.5, 1.0, 2.0] {
            let rhs = if p == 1.0 {
                "e^{−1}".to_string()
            } else {
                format!("e^{{−{p}^{alpha}}}")
            };
            b.abs(
                format!("laplace({p},{alpha})={rhs}"),
                "∫₀^∞ e^{-px} g_α(x) dx = e^{-p^α}",
                1e-5,
                levy_laplace(p, alpha, cfg).map(|c| c.numeric),
                Ok((-p.powf(alpha)).exp()),
            );
        }
    }
    let half = LevyParams::stable(0.5).expect("valid parameters");
    let smirnov = max_over(grid(0.05, 20.0, 100), |x| {
        let exact = x.powf(-1.5) * (-0.25 / x).exp() / (2.0 * PI.sqrt());
        Ok(((levy_density(x, half, cfg)? - exact) / exact).abs())
    });
    b.abs(
        "levy-smirnov alpha=1/2",
        "g_{1/2}(x) = x^{-3/2} e^{-1/(4x)}/(2√π); max relative gap on [0.05, 20]",
        1e-7,
        smirnov,
        Ok(0.0),
    );
    for (mu, alpha) in [(0.2, 0.5), (0.3, 0.7)] {
        b.rel(
            format!("levy moment mu={mu} alpha={alpha}"),
            "∫₀^∞ x^μ g_α(x) dx = Γ(μ) sin(πμ)/(sin(πμ/α) Γ(μ/α))",
            1e-4,
            levy_moment_quadrature(mu, alpha, cfg).map(|q| q.value),
            levy_moment(mu, alpha),
        );
    }
    for alpha in [0.3, 0.7] {
        b.rel(
            format!("levy mass alpha={alpha}"),
            "∫₀^∞ g_α(x) dx = 1",
            1e-6,
            levy_mass(alpha, cfg).map(|q| q.value),
            Ok(1.0),
        );
    }
    for p in [1.0, 4.0] {
        b.abs(
            format!("weibull laplace p={p} alpha=0.5"),
            "∫₀^∞ e^{-px} g_{α,α-1}(x) dx = p^{α-1} e^{-p^α}",
            1e-5,
            weibull_laplace_check(p, 0.5, cfg).map(|c| c.numeric),
            Ok(p.powf(-0.5) * (-p.sqrt()).exp()),
        );
    }
    let band = max_over([0.3, 0.5, 0.7].into_iter(), |alpha| {
        max_over(grid(5.0, 50.0, 10), |x| {
            let s = levy_density_series(x, alpha, cfg)?.value;
            let i = levy_density_integral(x, alpha, cfg)?.value;
            Ok(((s - i) / i).abs())
        })
    });
    b.abs(
        "levy series vs contour on [5,50]",
        "large-x series of g_α = contour integral; max relative gap",
        1e-6,
        band,
        Ok(0.0),
    );
}

fn fresnel_checks(b: &mut Builder) {
    let cfg = b.cfg;
    let c_gap = max_over(grid(0.0, 4.0, 40), |x| {
        Ok((fresnel_c(x, cfg)? - fresnel_c_quadrature(x, cfg)?.value).abs())
    });
    b.abs(
        "fresnel C hypergeometric vs quadrature on [0,4]",
        "C(x) = x ₁F₂(1/4; 1/2, 5/4; -(πx²/4)²)",
        1e-9,
        c_gap,
        Ok(0.0),
    );
    let s_gap = max_over(grid(0.0, 4.0, 40), |x| {
        Ok((fresnel_s(x, cfg)? - fresnel_s_quadrature(x, cfg)?.value).abs())
    });
    b.abs(
        "fresnel S hypergeometric vs quadrature on [0,4]",
        "S(x) = (π/6) x³ ₁F₂(3/4; 3/2, 7/4; -(πx²/4)²)",
        1e-9,
        s_gap,
        Ok(0.0),
    );
    let quad = fresnel_s_improper_quadrature(cfg).map(|q| q.value);
    b.rel(
        "fresnel improper integral",
        "∫₀^∞ S(ξ)/ξ³ dξ = (√π/12) Γ(1/4) χ̂_s^{-1/4} = π/4",
        1e-5,
        quad.clone(),
        fresnel_s_improper_integral(),
    );
    let readings = fresnel_s_improper_readings();
    b.rel(
        "fresnel improper integral, sqrt(pi)/6 prefactor",
        "(√π/6) Γ(1/4) χ̂_s^{-1/4} equals twice ∫₀^∞ S(ξ)/ξ³ dξ",
        1e-5,
        readings.clone().map(|r| r.doubled_prefactor),
        quad.map(|q| 2.0 * q),
    );
    b.flag(
        "fresnel improper integral, cosine weight",
        "χ̂_c^{-1/4} needs (1/4)_{-1/4} = Γ(0)/Γ(1/4): a pole",
        readings.map(|r| r.c_weight.is_none()),
    );
    for a in [0.5, 1.0, 3.0] {
        b.rel(
            format!("quartic gaussian a={a}"),
            "∫₀^∞ e^{-aξ⁴} dξ = Γ(1/4) a^{-1/4}/4",
            1e-9,
            quartic_gauss_integral_quadrature(a, cfg).map(|q| q.value),
            quartic_gauss_integral(a),
        );
    }
}
