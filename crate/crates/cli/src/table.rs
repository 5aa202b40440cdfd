//! `umbral table`: sampled curves, including the data behind the figures.

use umbral_gauss::gauss_trig::{cg, sg, sg_derivative};
use umbral_gauss::EvalConfig;

use crate::catalog::{evaluate, is_complex};
use crate::error::CliError;
use crate::output::Table;
use crate::params::Params;

/// Table modes besides plain catalog functions.
pub const MODES: &[(&str, &str)] = &[
    ("fig1", "columns x,cg,sg; the (cg, sg) trace is the egg-shaped curve"),
    ("fig2", "same columns as fig1"),
    ("fig3", "columns x,sg_d1..sg_dN, each scaled to unit max |value|; n=N or n=1..N"),
];

/// `steps` equally spaced points from `x_min` to `x_max` inclusive.
pub fn grid(x_min: f64, x_max: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    if !(x_min.is_finite() && x_max.is_finite()) || x_min > x_max {
        return Err(CliError::usage(format!("invalid range [{x_min}, {x_max}]")));
    }
    match steps {
        0 => Err(CliError::usage("steps must be at least 1")),
        1 if x_min == x_max => Ok(vec![x_min]),
        1 => Err(CliError::usage("a single step needs x_min = x_max")),
        _ => {
            // weighted form: a range symmetric about 0 gives an exactly odd grid
            let n = (steps - 1) as f64;
            Ok((0..steps)
                .map(|i| ((n - i as f64) * x_min + i as f64 * x_max) / n)
                .collect())
        }
    }
}

pub fn build(function: &str, xs: &[f64], mut params: Params, cfg: &EvalConfig) -> Result<Table, CliError> {
    match function {
        "fig1" | "fig2" => {
            params.finish()?;
            let mut t = Table::new(vec!["x".into(), "cg".into(), "sg".into()]);
            for &x in xs {
                t.push(vec![x, cg(x), sg(x, cfg)?]);
            }
            Ok(t)
        }
        "fig3" => {
            let orders = derivative_orders(params.take_str("n").as_deref())?;
            params.finish()?;
            fig3(xs, &orders, cfg)
        }
        _ => {
            let complex = is_complex(function);
            let columns = if complex {
                vec!["x".into(), format!("{function}_re"), format!("{function}_im")]
            } else {
                vec!["x".into(), function.to_string()]
            };
            let mut t = Table::new(columns);
            for (i, &x) in xs.iter().enumerate() {
                let mut p = params.clone();
                let e = evaluate(function, x, &mut p, cfg)?;
                if i == 0 {
                    p.finish()?;
                }
                match e.imag {
                    Some(im) if complex => t.push(vec![x, e.value, im]),
                    _ => t.push(vec![x, e.value]),
                }
            }
            Ok(t)
        }
    }
}

/// `n=4` and `n=1..4` both mean orders 1 through 4.
fn derivative_orders(spec: Option<&str>) -> Result<Vec<u32>, CliError> {
    let spec = spec.unwrap_or("1..4");
    let bad = || CliError::usage(format!("fig3 expects n=N or n=A..B, got n={spec}"));
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
        None => (1, spec.parse().map_err(|_| bad())?),
    };
    if lo < 1 || lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn fig3(xs: &[f64], orders: &[u32], cfg: &EvalConfig) -> Result<Table, CliError> {
    let mut columns = vec!["x".to_string()];
    columns.extend(orders.iter().map(|m| format!("sg_d{m}")));
    let mut raw = Vec::with_capacity(xs.len());
    let mut peak = vec![0.0f64; orders.len()];
    for &x in xs {
        let mut row = Vec::with_capacity(orders.len());
        for (j, &m) in orders.iter().enumerate() {
            let v = sg_derivative(m, x, cfg)?;
            peak[j] = peak[j].max(v.abs());
            row.push(v);
        }
        raw.push(row);
    }
    let mut t = Table::new(columns);
    for (&x, row) in xs.iter().zip(raw) {
        let mut out = vec![x];
        out.extend(row.iter().zip(&peak).map(|(v, p)| if *p > 0.0 { v / p } else { *v }));
        t.push(out);
    }
    Ok(t)
}
