//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use umbral_gauss::fresnel::*;
use umbral_gauss::gauss_trig::*;
use umbral_gauss::levy::*;
use umbral_gauss::oracle::adaptive_quad;
use umbral_gauss::quasi_gauss::*;
use umbral_gauss::special::{dawson, gamma, hermite_two_var, hyp1f1, hyp2f1};
use umbral_gauss::{EvalConfig, Result};

type Outcome = Result<(bool, String)>;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn grid(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| a + (b - a) * i as f64 / (n - 1) as f64)
}

/// Accumulates sub-checks of one criterion.
#[derive(Default)]
struct Tally {
    ok: bool,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { ok: true, notes: Vec::new() }
    }

    fn check(&mut self, label: &str, value: f64, bound: f64) {
        let pass = value <= bound;
        self.ok &= pass;
        self.notes.push(format!("{label} {value:.2e}{}{bound:.0e}", if pass { "<=" } else { ">" }));
    }

    fn flag(&mut self, label: &str, pass: bool) {
        self.ok &= pass;
        self.notes.push(format!("{label} {}", if pass { "ok" } else { "WRONG" }));
    }

    fn done(self) -> Outcome {
        Ok((self.ok, self.notes.join("; ")))
    }
}

/// Independent erfi: `(2/√π) ∫₀ˣ e^{t²} dt`.
fn erfi_quad(x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(2.0 / PI.sqrt() * adaptive_quad(|t| (t * t).exp(), 0.0, x, cfg)?.value)
}

fn five_point(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    Ok((f(x - 2.0 * h)? - 8.0 * f(x - h)? + 8.0 * f(x + h)? - f(x + 2.0 * h)?) / (12.0 * h))
}

fn c01(cfg: &EvalConfig) -> Outcome {
    let q = quasi_gauss_integral_quadrature(1, cfg)?.value;
    let mut t = Tally::new();
    t.check("closed vs 2-D quad", rel(quasi_gauss_integral(1)?, q), 1e-6);
    t.check("quad vs π", rel(q, PI), 1e-6);
    t.done()
}

fn c02(cfg: &EvalConfig) -> Outcome {
    let mut t = Tally::new();
    for n in 2..=6u32 {
        let expect = PI.sqrt() * gamma(1.0 - 0.5 / f64::from(n))?;
        let q = quasi_gauss_integral_quadrature(n, cfg)?.value;
        t.check(&format!("n={n}"), rel(quasi_gauss_integral(n)?, q).max(rel(q, expect)), 1e-6);
    }
    t.done()
}

fn c03(cfg: &EvalConfig) -> Outcome {
    let mut worst: f64 = 0.0;
    for x in grid(-3.0, 3.0, 200) {
        let p = GaussTrigPoint::at(x, cfg)?;
        let e = erfi_quad(x, cfg)?;
        let rhs = (-2.0 * x * x).exp() * (1.0 + e * e);
        worst = worst.max((p.norm_sqr() - rhs).abs());
    }
    let mut t = Tally::new();
    t.check("max |cg²+sg² − e^{−2x²}(1+erfi²)|", worst, 1e-10);
    t.done()
}

fn c04(cfg: &EvalConfig) -> Outcome {
    let mut worst: f64 = 0.0;
    for x in grid(-3.0, 3.0, 121) {
        let a = sg(x, cfg)?;
        let b = 2.0 / PI.sqrt() * dawson(x, cfg)?;
        let c = 2.0 / PI.sqrt() * x * (-x * x).exp() * hyp1f1(0.5, 1.5, x * x, cfg)?.value;
        let d = sg_series(x, cfg)?.value;
        worst = worst.max((a - b).abs()).max((a - c).abs()).max((a - d).abs());
    }
    let mut t = Tally::new();
    t.check("sg / Dawson / ₁F₁ / series spread", worst, 1e-10);
    t.done()
}

fn c05(cfg: &EvalConfig) -> Outcome {
    let mut t = Tally::new();
    t.check("∫S_g/x vs π", rel(sg_over_x_integral(cfg)?.value, PI), 1e-6);
    t.check("₂F₁(½,½;3/2;1) vs π/2", rel(hyp2f1(0.5, 0.5, 1.5, 1.0, cfg)?.value, PI / 2.0), 1e-12);
    t.done()
}

fn c06(cfg: &EvalConfig) -> Outcome {
    let mut t = Tally::new();
    for a in [0.25, 0.5, 0.75] {
        let q = sg_alpha_integral_quadrature(a, cfg)?.value;
        t.check(&format!("α={a}"), rel(sg_alpha_integral(a, cfg)?, q), 1e-7);
    }
    t.done()
}

fn c07(cfg: &EvalConfig) -> Outcome {
    let mut t = Tally::new();
    for x in [0.5, 1.0, 2.0] {
        t.check(&format!("x={x}"), kk_residual(x, cfg)?.abs(), 1e-4);
    }
    t.done()
}

fn c08(cfg: &EvalConfig) -> Outcome {
    let h = 1e-3;
    let mut t = Tally::new();
    for m in 1..=4u32 {
        let mut err: f64 = 0.0;
        let mut scale: f64 = 0.0;
        let mut c_err: f64 = 0.0;
        let mut c_scale: f64 = 0.0;
        for x in grid(-2.0, 2.0, 41) {
            let exact = sg_derivative(m, x, cfg)?;
            let fd = five_point(|y| sg_derivative(m - 1, y, cfg), x, h)?;
            err = err.max((exact - fd).abs());
            scale = scale.max(exact.abs());
            let c_exact = cg_derivative(m, x);
            let c_fd = five_point(|y| Ok(cg_derivative(m - 1, y)), x, h)?;
            c_err = c_err.max((c_exact - c_fd).abs());
            c_scale = c_scale.max(c_exact.abs());
        }
        t.check(&format!("sg m={m}"), err / scale, 1e-5);
        t.check(&format!("cg m={m}"), c_err / c_scale, 1e-5);
    }
    t.done()
}

fn c09(cfg: &EvalConfig) -> Outcome {
    let mut t = Tally::new();
    let p = QuasiGaussParams::new(3, 1.0, 0.0)?;
    t.flag("M0 = 1", moment(0, &p)?.value == 1.0);
    let m2 = moment(2, &p)?.value;
    t.check("M2 vs quad", rel(m2, moment_quadrature(2, &p, cfg)?.value), 1e-6);
    t.flag("m=5,n=3 finite", moment(5, &p)?.finite);
    let p2 = QuasiGaussParams::new(2, 1.0, 0.0)?;
    t.flag("m=5,n=2 infinite", !moment(5, &p2)?.finite);
    t.done()
}

fn c10(cfg: &EvalConfig) -> Outcome {
    let mut t = Tally::new();
    let mut worst: f64 = 0.0;
    for alpha in [0.3, 0.5, 0.7] {
        for p in [0.5, 1.0, 2.0] {
            let c = levy_laplace(p, alpha, cfg)?;
            worst = worst.max((c.numeric - (-p.powf(alpha)).exp()).abs());
        }
    }
    t.check("Laplace 3×3", worst, 1e-5);
    let half = LevyParams::stable(0.5)?;
    let mut smirnov: f64 = 0.0;
    for x in grid(0.05, 20.0, 100) {
        let exact = x.powf(-1.5) * (-0.25 / x).exp() / (2.0 * PI.sqrt());
        smirnov = smirnov.max(rel(levy_density(x, half, cfg)?, exact));
    }
    t.check("Lévy–Smirnov", smirnov, 1e-7);
    for (mu, alpha) in [(0.2, 0.5), (0.3, 0.7)] {
        let q = levy_moment_quadrature(mu, alpha, cfg)?.value;
        t.check(&format!("moment ({mu},{alpha})"), rel(levy_moment(mu, alpha)?, q), 1e-4);
    }
    for p in [1.0, 4.0] {
        let c = weibull_laplace_check(p, 0.5, cfg)?;
        let closed = p.powf(-0.5) * (-p.sqrt()).exp();
        t.check(&format!("Weibull p={p}"), (c.numeric - closed).abs(), 1e-5);
    }
    t.done()
}

fn c11(cfg: &EvalConfig) -> Outcome {
    let mut t = Tally::new();
    let mut worst: f64 = 0.0;
    for x in grid(0.0, 4.0, 40) {
        worst = worst.max((fresnel_c(x, cfg)? - fresnel_c_quadrature(x, cfg)?.value).abs());
        worst = worst.max((fresnel_s(x, cfg)? - fresnel_s_quadrature(x, cfg)?.value).abs());
    }
    t.check("₁F₂ vs quad on [0,4]", worst, 1e-9);
    let q = fresnel_s_improper_quadrature(cfg)?.value;
    t.check("∫S/ξ³ closed vs quad", rel(fresnel_s_improper_integral()?, q), 1e-5);
    t.done()
}

fn c12(cfg: &EvalConfig) -> Outcome {
    let mut t = Tally::new();
    for a in [0.0, 0.5, 1.0] {
        let q = i_alpha_quadrature(a, cfg)?.value;
        let expect = PI.sqrt() * gamma(1.0 - a / 2.0)?;
        t.check(&format!("α={a}"), rel(i_alpha(a)?, q).max(rel(q, expect)), 1e-6);
    }
    t.check("I(1) vs π", rel(i_alpha(1.0)?, PI), 1e-6);
    t.done()
}

fn c13(cfg: &EvalConfig) -> Outcome {
    let mut t = Tally::new();
    for n in [1u32, 2, 3, 5] {
        let mut worst: f64 = 0.0;
        let top = x_switch(n);
        let mut x = 0.5;
        while x <= top + 1e-12 {
            let s = quasi_gauss_series(x, n, cfg)?.value;
            let i = quasi_gauss_integral_rep(x, n, cfg)?.value;
            worst = worst.max(rel(s, i));
            x += 0.05;
        }
        t.check(&format!("quasi band n={n}"), worst, 1e-8);
    }
    let mut levy_band: f64 = 0.0;
    for alpha in [0.3, 0.5, 0.7] {
        for x in grid(5.0, 50.0, 10) {
            let s = levy_density_series(x, alpha, cfg)?.value;
            let i = levy_density_integral(x, alpha, cfg)?.value;
            levy_band = levy_band.max(rel(s, i));
        }
    }
    t.check("Lévy band [5,50]", levy_band, 1e-6);

    let mut parity = true;
    for x in grid(0.1, 3.0, 15) {
        parity &= cg(-x) == cg(x);
        parity &= sg(-x, cfg)? == -sg(x, cfg)?;
        parity &= (sg_antiderivative(-x, cfg)? - sg_antiderivative(x, cfg)?).abs() < 1e-14;
        parity &= quasi_gauss(-x, 3, cfg)? == quasi_gauss(x, 3, cfg)?;
        parity &= fresnel_c(-x, cfg)? == -fresnel_c(x, cfg)?;
        parity &= fresnel_s(-x, cfg)? == -fresnel_s(x, cfg)?;
    }
    t.flag("parity", parity);

    // Σ_{k≤40} t^k/k! H_k(x,y) against e^{xt+yt²}
    let (tt, xs, ys) = (0.5, [-1.0, 0.3, 2.0], [-0.7, 0.4, 1.5]);
    let mut gen: f64 = 0.0;
    for &x in &xs {
        for &y in &ys {
            let mut sum = 0.0;
            let mut coef = 1.0;
            for k in 0..=40u32 {
                sum += coef * hermite_two_var(k, x, y);
                coef *= tt / f64::from(k + 1);
            }
            gen = gen.max(rel(sum, (x * tt + y * tt * tt).exp()));
        }
    }
    t.check("H_k generating sum", gen, 1e-12);

    // Σ t^s/s! H_s(x,y|n) against e(xt+yt²|n) = Σ Γ(k/n+1) z^k/k!
    let mut gen_n: f64 = 0.0;
    for n in [2u32, 3, 5] {
        let (x, y, tt) = (0.6, -0.5, 0.4);
        let mut lhs = 0.0;
        let mut coef = 1.0;
        for s in 0..=40u32 {
            lhs += coef * hermite_like(s, x, y, n)?;
            coef *= tt / f64::from(s + 1);
        }
        let z: f64 = x * tt + y * tt * tt;
        let mut rhs = 0.0;
        let mut zk = 1.0;
        for k in 0..=60u32 {
            rhs += gamma(f64::from(k) / f64::from(n) + 1.0)? * zk;
            zk *= z / f64::from(k + 1);
        }
        gen_n = gen_n.max(rel(lhs, rhs));
    }
    t.check("H_s(·|n) generating sum", gen_n, 1e-12);

    let mut tail: f64 = 0.0;
    for n in [1u32, 2, 3] {
        let fact: f64 = (1..=n).map(f64::from).product();
        tail = tail.max(rel(quasi_gauss(30.0, n, cfg)? * 30f64.powi(2 * n as i32), fact));
    }
    t.check("tail law x=30", tail, 0.05);
    t.done()
}

fn main() -> ExitCode {
    let cfg = EvalConfig::default();
    let criteria: [(&str, fn(&EvalConfig) -> Outcome); 13] = [
        ("I_e(1) = π", c01),
        ("I_e(n) = √π Γ(1−1/(2n)), n = 2..6", c02),
        ("Gaussian trigonometric identity", c03),
        ("S_g three-way agreement", c04),
        ("∫S_g/x = π and ₂F₁ Gauss sum", c05),
        ("∫S_g(x,α) = ₂F₁/√π", c06),
        ("Kramers–Kronig residual", c07),
        ("derivatives vs finite differences", c08),
        ("quasi-Gaussian moments", c09),
        ("Lévy laws", c10),
        ("Fresnel integrals", c11),
        ("I(α) = √π Γ(1−α/2)", c12),
        ("property suite", c13),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = match run(&cfg) {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failures += 1;
        }
        println!(
            "{} criterion {:>2}: {name} [{detail}] ({:.2?})",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
