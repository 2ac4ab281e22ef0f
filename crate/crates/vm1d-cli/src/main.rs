//! Command-line front end: evaluation, tabulation, verification suites,
//! model assembly, and desk-scale spectra.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 numerical
//! non-convergence, 4 verification failure.

mod commands;
mod config;
mod format;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use config::FileConfig;
use report::{FaultInjection, SuiteKind, VerificationReport};
use vm1d_core::models::Model;
use vm1d_core::potential::Method;
use vm1d_core::quad::QuadratureSpec;
use vm1d_core::Error;

#[derive(Parser)]
#[command(
    name = "vm1d",
    version,
    about = "Regularized 1D Coulomb potentials: evaluation, property verification, effective atomic models, and ground-state spectra"
)]
struct Cli {
    /// Key = value file overriding default tolerances (rel_tol, abs_tol,
    /// tol); explicit flags always win
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum MethodArg {
    #[default]
    Auto,
    Quadrature,
    #[value(alias = "closed_m0")]
    ClosedM0,
    Recursion,
    Asymptotic,
    Polynomial,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Quadrature => Method::Quadrature,
            MethodArg::ClosedM0 => Method::ClosedM0,
            MethodArg::Recursion => Method::Recursion,
            MethodArg::Asymptotic => Method::Asymptotic,
            MethodArg::Polynomial => Method::Polynomial,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum TableFormatArg {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    /// Shift the pinch upper bound down by 1e-3 (harness self-test).
    BoundsUpper,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum TestFnArg {
    #[default]
    Gaussian,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Zero,
    Slater,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate V_m(x) (17 significant digits)
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        m: f64,
        #[arg(long)]
        x: f64,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        /// Relative quadrature tolerance
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Tabulate V_m over an x range as CSV or JSON
    Table {
        /// Comma-separated list of orders m
        #[arg(long = "m-list", value_delimiter = ',', required = true, allow_hyphen_values = true)]
        m_list: Vec<f64>,
        #[arg(long = "x-min")]
        x_min: f64,
        #[arg(long = "x-max")]
        x_max: f64,
        #[arg(long)]
        points: usize,
        /// Logarithmic spacing (requires x-min > 0)
        #[arg(long)]
        log: bool,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormatArg,
    },
    /// Run property verification suites
    Verify {
        /// all|bounds|ode|recursion|convexity|ratio|fourier|avg|pairs|delta
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
        #[arg(long = "inject-fault", value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Decompose a Landau orbital pair into relative-momentum weights
    Pair {
        #[arg(long)]
        m1: usize,
        #[arg(long)]
        m2: usize,
        #[arg(long)]
        antisymmetrize: bool,
    },
    /// Averaged potential V_av^N(x)
    Avg {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        x: f64,
    },
    /// Fourier transform of V_m at frequency xi
    Fourier {
        #[arg(long, allow_hyphen_values = true)]
        m: f64,
        #[arg(long, allow_hyphen_values = true)]
        xi: f64,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Pair the delta-scaled potential (β/(2lnβ))V_m(βx) with a test function
    Delta {
        #[arg(long, allow_hyphen_values = true)]
        m: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long, value_enum, default_value_t)]
        phi: TestFnArg,
    },
    /// Ground state of the effective 1D model (N = 1 or 2)
    Spectrum {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long = "N")]
        n: usize,
        #[arg(long = "Z")]
        z: f64,
        #[arg(long = "B")]
        b: f64,
        #[arg(long = "grid-points")]
        grid_points: Option<usize>,
        #[arg(long = "half-width")]
        half_width: Option<f64>,
        /// Eigensolver residual tolerance
        #[arg(long)]
        tol: Option<f64>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    NoConvergence(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::QuadratureNoConvergence(_) | Error::EigenNoConvergence { .. } => {
                Failure::NoConvergence(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn quad_spec(rel_flag: Option<f64>, file: &FileConfig) -> QuadratureSpec {
    let mut spec = QuadratureSpec::default();
    if let Some(rel) = file.rel_tol {
        spec.rel_tol = rel;
    }
    if let Some(abs) = file.abs_tol {
        spec.abs_tol = abs;
    }
    if let Some(rel) = rel_flag {
        spec.rel_tol = rel;
        spec.abs_tol = spec.abs_tol.min(rel);
    }
    spec
}

fn print_text_report(report: &VerificationReport) {
    let failures = report.checks.iter().filter(|c| !c.pass).count();
    println!(
        "suite {}: {} checks, {} failed",
        report.suite,
        report.checks.len(),
        failures
    );
    for check in &report.checks {
        println!(
            "  {} {:<42} worst {:>12.3e} (tol {:.1e}) at {}",
            if check.pass { "PASS" } else { "FAIL" },
            check.id,
            check.worst_violation,
            check.tolerance,
            if check.worst_at.is_empty() { "-" } else { &check.worst_at }
        );
    }
    if !report.exploratory.is_empty() {
        println!("exploratory (reported, never asserted):");
        for item in &report.exploratory {
            println!("  {}: {}", item.id, item.observation);
        }
    }
}

fn execute(cli: Cli) -> Result<u8, Failure> {
    let file_config = match &cli.config {
        Some(path) => FileConfig::load(path).map_err(Failure::Usage)?,
        None => FileConfig::default(),
    };

    match cli.command {
        Command::Eval { m, x, method, tol } => {
            let spec = quad_spec(tol, &file_config);
            println!("{}", commands::eval(m, x, method.into(), &spec)?);
            Ok(0)
        }
        Command::Table {
            m_list,
            x_min,
            x_max,
            points,
            log,
            format,
        } => {
            if points < 1 || (points > 1 && !(x_min < x_max)) {
                return Err(Failure::Usage(
                    "table needs points >= 1 and x-min < x-max".to_string(),
                ));
            }
            if log && !(x_min > 0.0) {
                return Err(Failure::Usage("log spacing needs x-min > 0".to_string()));
            }
            let spec = quad_spec(None, &file_config);
            let fmt = match format {
                TableFormatArg::Csv => commands::TableFormat::Csv,
                TableFormatArg::Json => commands::TableFormat::Json,
            };
            print!(
                "{}",
                commands::table(&m_list, x_min, x_max, points, log, &fmt, &spec)?
            );
            Ok(0)
        }
        Command::Verify {
            suite,
            report,
            inject_fault,
        } => {
            let fault = match inject_fault {
                Some(FaultArg::BoundsUpper) => FaultInjection::BoundsUpperShift,
                None => FaultInjection::None,
            };
            let result = if suite == "all" {
                report::run_all(fault)
            } else {
                let kind = SuiteKind::ALL
                    .into_iter()
                    .find(|k| k.name() == suite)
                    .ok_or_else(|| {
                        Failure::Usage(format!(
                            "unknown suite `{suite}` (expected all|bounds|ode|recursion|convexity|ratio|fourier|avg|pairs|delta)"
                        ))
                    })?;
                report::run_suite(kind, fault)
            }
            .map_err(Failure::from)?;
            match report {
                ReportFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&result).expect("report serializes")
                    );
                }
                ReportFormat::Text => print_text_report(&result),
            }
            Ok(if result.all_pass() { 0 } else { 4 })
        }
        Command::Pair {
            m1,
            m2,
            antisymmetrize,
        } => {
            print!("{}", commands::pair(m1, m2, antisymmetrize)?);
            Ok(0)
        }
        Command::Avg { n, x } => {
            println!("{}", commands::avg(n, x)?);
            Ok(0)
        }
        Command::Fourier { m, xi, tol } => {
            let spec = quad_spec(tol, &file_config);
            println!("{}", commands::fourier(m, xi, &spec)?);
            Ok(0)
        }
        Command::Delta { m, beta, phi } => {
            let TestFnArg::Gaussian = phi;
            let spec = quad_spec(None, &file_config);
            println!("{}", commands::delta(m, beta, &spec)?);
            Ok(0)
        }
        Command::Spectrum {
            model,
            n,
            z,
            b,
            grid_points,
            half_width,
            tol,
        } => {
            let args = commands::SpectrumArgs {
                model: match model {
                    ModelArg::Zero => Model::Zero,
                    ModelArg::Slater => Model::Slater,
                },
                n,
                z,
                b,
                grid_points: grid_points.unwrap_or(if n == 1 { 2001 } else { 201 }),
                half_width: half_width.unwrap_or(40.0),
                tol: tol.or(file_config.tol).unwrap_or(1e-10),
            };
            print!("{}", commands::spectrum(&args)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match execute(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("domain error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NoConvergence(msg)) => {
            eprintln!("non-convergence: {msg}");
            ExitCode::from(3)
        }
    }
}
