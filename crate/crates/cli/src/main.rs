use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use umbral_gauss::quasi_gauss::{moment, QuasiGaussParams};
use umbral_gauss::EvalConfig;
use umbral_gauss_cli::catalog::{evaluate, CATALOG};
use umbral_gauss_cli::output::{fmt17, Table};
use umbral_gauss_cli::params::{parse_real, Params};
use umbral_gauss_cli::table::{self, MODES};
use umbral_gauss_cli::validate::{self, Suite};
use umbral_gauss_cli::{CliError, ExitStatus};

#[derive(Parser)]
#[command(name = "umbral", version, about = "Gaussian trigonometric, quasi-Gaussian, Lévy and Fresnel functions")]
struct Cli {
    /// Relative tolerance for series; for `validate`, also a cap on every check tolerance
    #[arg(long, global = true)]
    rel_tol: Option<f64>,

    /// Absolute tolerance for series
    #[arg(long, global = true)]
    abs_tol: Option<f64>,

    /// Term budget for series
    #[arg(long, global = true)]
    max_terms: Option<usize>,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point
    #[command(allow_negative_numbers = true)]
    Eval {
        /// Function name; see --list
        function: Option<String>,
        x: Option<String>,
        /// Parameters as key=value
        params: Vec<String>,
        /// Print the catalog and exit
        #[arg(long)]
        list: bool,
    },
    /// Sample a function or a figure mode on an even grid
    #[command(allow_negative_numbers = true)]
    Table {
        /// Catalog function, or fig1, fig2, fig3
        function: String,
        x_min: String,
        x_max: String,
        /// Number of points, endpoints included
        steps: usize,
        params: Vec<String>,
    },
    /// Run a validation suite: gauss-trig, quasi-gauss, levy, fresnel or all
    Validate { suite: Suite },
    /// Quasi-Gaussian moments M_(m,d) and the central moments, with finiteness
    Moments {
        /// n=<order> [sigma=1] [d=0] [m_max=8]
        params: Vec<String>,
    },
}

fn config(cli: &Cli) -> Result<EvalConfig, CliError> {
    let mut cfg = EvalConfig::default();
    if let Some(v) = cli.rel_tol {
        cfg = cfg.with_rel_tol(v);
    }
    if let Some(v) = cli.abs_tol {
        cfg = cfg.with_abs_tol(v);
    }
    if let Some(v) = cli.max_terms {
        cfg = cfg.with_max_terms(v);
    }
    cfg.validate().map_err(|e| CliError::usage(e.to_string()))?;
    Ok(cfg)
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn real(s: &str, what: &str) -> Result<f64, CliError> {
    parse_real(s).map_err(|_| CliError::usage(format!("{what} '{s}' is not a number")))
}

fn run(cli: Cli) -> Result<ExitStatus, CliError> {
    let cfg = config(&cli)?;
    let format = cli.format.unwrap_or(Format::Csv);
    match &cli.command {
        Command::Eval {
            function,
            x,
            params,
            list,
        } => {
            if *list {
                let mut w = sink(&cli.out)?;
                for (name, args, about) in CATALOG {
                    writeln!(w, "{name:<26} {args:<14} {about}")?;
                }
                for (name, about) in MODES {
                    writeln!(w, "{name:<26} {:<14} table only: {about}", "")?;
                }
                w.flush()?;
                return Ok(ExitStatus::Success);
            }
            let function = function.as_deref().ok_or_else(|| CliError::usage("eval needs a function name"))?;
            let x = real(x.as_deref().ok_or_else(|| CliError::usage("eval needs a point x"))?, "x")?;
            let mut p = Params::parse(params)?;
            let e = evaluate(function, x, &mut p, &cfg)?;
            p.finish()?;
            let mut w = sink(&cli.out)?;
            match format {
                Format::Json => {
                    serde_json::to_writer_pretty(&mut w, &e).map_err(io::Error::from)?;
                    writeln!(w)?;
                }
                Format::Csv => {
                    let cell = |v: Option<String>| v.unwrap_or_default();
                    writeln!(w, "function,x,value,imag,err_estimate,terms_used,evaluations")?;
                    writeln!(
                        w,
                        "{},{},{},{},{},{},{}",
                        e.function,
                        fmt17(e.x),
                        fmt17(e.value),
                        cell(e.imag.map(fmt17)),
                        cell(e.err_estimate.map(fmt17)),
                        cell(e.terms_used.map(|t| t.to_string())),
                        cell(e.evaluations.map(|t| t.to_string())),
                    )?;
                }
            }
            w.flush()?;
            Ok(ExitStatus::Success)
        }
        Command::Table {
            function,
            x_min,
            x_max,
            steps,
            params,
        } => {
            let xs = table::grid(real(x_min, "x_min")?, real(x_max, "x_max")?, *steps)?;
            let t = table::build(function, &xs, Params::parse(params)?, &cfg)?;
            emit(&t, format, &cli.out)?;
            Ok(ExitStatus::Success)
        }
        Command::Validate { suite } => {
            let report = validate::run(*suite, &cfg, cli.rel_tol);
            let summary = report.human_summary();
            match (&cli.out, format) {
                (Some(path), f) => {
                    let mut w = sink(&Some(path.clone()))?;
                    if f == Format::Csv && cli.format.is_some() {
                        write_checks_csv(&report, &mut w)?;
                    } else {
                        writeln!(w, "{}", report.to_json())?;
                    }
                    w.flush()?;
                    print!("{summary}");
                }
                (None, Format::Json) if cli.format.is_some() => {
                    println!("{}", report.to_json());
                    eprint!("{summary}");
                }
                (None, _) if cli.format == Some(Format::Csv) => {
                    write_checks_csv(&report, &mut io::stdout().lock())?;
                    eprint!("{summary}");
                }
                (None, _) => print!("{summary}"),
            }
            Ok(if report.all_passed() {
                ExitStatus::Success
            } else {
                ExitStatus::ValidationFailed
            })
        }
        Command::Moments { params } => {
            let mut p = Params::parse(params)?;
            let n = p.required_count("n")?;
            let sigma = p.real_or("sigma", 1.0)?;
            let d = p.real_or("d", 0.0)?;
            let m_max = p.count_or("m_max", 8)?;
            p.finish()?;
            let qp = QuasiGaussParams::new(n, sigma, d)?;
            let central = QuasiGaussParams::new(n, sigma, 0.0)?;
            let mut t = Table::new(vec!["m".into(), "moment".into(), "central_moment".into(), "finite".into()]);
            for m in 0..=m_max {
                let r = moment(m, &qp)?;
                let c = moment(m, &central)?;
                t.push(vec![f64::from(m), r.value, c.value, if r.finite { 1.0 } else { 0.0 }]);
            }
            emit(&t, format, &cli.out)?;
            Ok(ExitStatus::Success)
        }
    }
}

fn emit(t: &Table, format: Format, out: &Option<PathBuf>) -> Result<(), CliError> {
    let mut w = sink(out)?;
    match format {
        Format::Csv => t.write_csv(&mut w)?,
        Format::Json => t.write_json(&mut w)?,
    }
    w.flush()?;
    Ok(())
}

fn write_checks_csv(report: &validate::ValidationReport, w: &mut dyn Write) -> io::Result<()> {
    let opt = |v: Option<f64>| v.map(fmt17).unwrap_or_default();
    writeln!(w, "name,computed,expected,abs_err,rel_err,tolerance,pass")?;
    for c in &report.checks {
        writeln!(
            w,
            "\"{}\",{},{},{},{},{},{}",
            c.name.replace('"', "\"\""),
            opt(c.computed),
            opt(c.expected),
            opt(c.abs_err),
            opt(c.rel_err),
            fmt17(c.tolerance),
            c.pass
        )?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitStatus::Usage.into()
            } else {
                ExitStatus::Success.into()
            };
        }
    };
    match run(cli) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("umbral: {e}");
            e.exit_status().into()
        }
    }
}
