//! Adaptive 21-point Gauss–Kronrod quadrature on a finite interval.

use serde::{Deserialize, Serialize};

use crate::config::EvalConfig;
use crate::error::{Error, Result};

/// Outcome of a numerical integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadResult {
    /// Sum of two independent pieces; errors add.
    pub fn combine(self, other: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            err_estimate: self.err_estimate + other.err_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }

    pub fn scaled(self, factor: f64) -> QuadResult {
        QuadResult {
            value: self.value * factor,
            err_estimate: self.err_estimate * factor.abs(),
            ..self
        }
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    abs: f64,
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

fn qk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    let mut res_gauss = 0.0;
    let mut res_kronrod = f_center * WGK[10];
    let mut res_abs = res_kronrod.abs();
    for j in 0..5 {
        let k = 2 * j + 1;
        let dx = half * XGK[k];
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv1[k] = f1;
        fv2[k] = f2;
        res_gauss += WG[j] * (f1 + f2);
        res_kronrod += WGK[k] * (f1 + f2);
        res_abs += WGK[k] * (f1.abs() + f2.abs());
    }
    for j in 0..5 {
        let k = 2 * j;
        let dx = half * XGK[k];
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv1[k] = f1;
        fv2[k] = f2;
        res_kronrod += WGK[k] * (f1 + f2);
        res_abs += WGK[k] * (f1.abs() + f2.abs());
    }
    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for k in 0..10 {
        res_asc += WGK[k] * ((fv1[k] - mean).abs() + (fv2[k] - mean).abs());
    }
    let err = (res_kronrod - res_gauss) * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    Panel {
        a,
        b,
        value: res_kronrod * half,
        err: rescale_error(err, res_abs, res_asc),
        abs: res_abs,
    }
}

/// Integrates `f` over `[a, b]` by adaptive bisection of the panel with the
/// largest error estimate.
///
/// Accepts once the summed error is within
/// `max(abs_tol, quad_rel_tol·|value|, 100ε·∫|f|)`; the last term is the
/// floor below which per-panel estimates cannot fall in binary64. Panels too narrow to split in binary64
/// are retired. Fails with `Error::Quadrature` when the subdivision budget
/// runs out, and with `Error::Domain` when `f` returns a non-finite value.
pub fn adaptive_quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!("finite limits required, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            err_estimate: 0.0,
            evaluations: 0,
            converged: true,
        });
    }
    let check = |p: Panel| -> Result<Panel> {
        if p.value.is_finite() && p.err.is_finite() {
            Ok(p)
        } else {
            Err(Error::Domain(format!("integrand not finite on [{}, {}]", p.a, p.b)))
        }
    };
    let mut active = vec![check(qk21(&f, a, b))?];
    let mut retired_value = 0.0;
    let mut retired_err = 0.0;
    let mut retired_abs = 0.0;
    let mut evaluations = 21;
    let mut subdivisions = 1;
    loop {
        let value: f64 = retired_value + active.iter().map(|p| p.value).sum::<f64>();
        let err: f64 = retired_err + active.iter().map(|p| p.err).sum::<f64>();
        let abs: f64 = retired_abs + active.iter().map(|p| p.abs).sum::<f64>();
        let tol = cfg.quad_tol(value).max(100.0 * f64::EPSILON * abs);
        if err <= tol || active.is_empty() {
            let converged = err <= tol;
            let result = QuadResult {
                value,
                err_estimate: err,
                evaluations,
                converged,
            };
            return if converged {
                Ok(result)
            } else {
                Err(quad_error(result))
            };
        }
        if subdivisions >= cfg.quad_max_subdivisions {
            return Err(quad_error(QuadResult {
                value,
                err_estimate: err,
                evaluations,
                converged: false,
            }));
        }
        let (i, _) = active
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .expect("active panels are non-empty");
        let worst = active.swap_remove(i);
        let mid = 0.5 * (worst.a + worst.b);
        let width = (worst.b - worst.a).abs();
        if width <= 1e3 * f64::EPSILON * mid.abs().max(f64::MIN_POSITIVE) || mid == worst.a || mid == worst.b {
            retired_value += worst.value;
            retired_err += worst.err;
            retired_abs += worst.abs;
            continue;
        }
        active.push(check(qk21(&f, worst.a, mid))?);
        active.push(check(qk21(&f, mid, worst.b))?);
        evaluations += 42;
        subdivisions += 1;
    }
}

pub(crate) fn quad_error(r: QuadResult) -> Error {
    Error::Quadrature {
        estimate: r.value,
        error: r.err_estimate,
        evaluations: r.evaluations,
    }
}
