//! Command-line front end. The binary is a thin wrapper over this
//! module; every command is also reachable through the library API.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 evaluation domain error, 4 I/O error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::cache;
use crate::derivs::{d2p_dnu2_anydeg, dp_dnu, dq_dnu_offcut, dq_dnu_oncut, DerivativeResult,
                    EvalError, EvalPoint};
use crate::exact::Rational;
use crate::polys::{b_poly, c_poly, r_poly};
use crate::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(
    name = "lnd",
    version,
    about = "Degree derivatives of Legendre functions: exact coefficient \
             polynomials, closed-form evaluation, verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact coefficients of one of the polynomial families
    Coeffs {
        /// Polynomial family
        #[arg(long, value_enum)]
        poly: PolyKind,
        /// Degree
        #[arg(long)]
        n: u32,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
        format: OutFormat,
        /// Coefficient basis
        #[arg(long, value_enum, default_value_t = BasisKind::Legendre)]
        basis: BasisKind,
    },
    /// Evaluate a derivative at one point; prints a JSON record
    Eval {
        /// Function to evaluate
        #[arg(long, value_enum)]
        func: FuncKind,
        /// Degree (d2P also accepts negative degrees)
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Point, as "re" or "re,im"
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// CSV table of values over a point grid for degrees 0..=n-max
    Table {
        /// Function to evaluate
        #[arg(long, value_enum)]
        func: FuncKind,
        /// Largest degree (inclusive)
        #[arg(long)]
        n_max: u32,
        /// Grid "start:stop:count", optionally "/start:stop:count" for the
        /// imaginary axis
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
    },
    /// Run a verification suite
    Verify {
        /// Suite name: lown|sums|ode|recurrence|oracle|all
        #[arg(long)]
        suite: String,
        /// Degree bound for the sweeps
        #[arg(long, default_value_t = 50)]
        n_max: u32,
        /// Tolerance for the floating-point suites
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        /// RNG seed for the randomized sweeps
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Manage the on-disk coefficient cache
    Cache {
        /// Action to perform
        #[arg(value_enum)]
        action: CacheAction,
        /// Largest degree to build (required for build)
        #[arg(long)]
        n_max: Option<u32>,
        /// Cache directory (defaults to $LND_CACHE_DIR or ./.lnd-cache)
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum PolyKind {
    #[value(name = "R")]
    R,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
}

#[derive(ValueEnum, Clone, Copy)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy)]
enum BasisKind {
    Legendre,
    Monomial,
}

#[derive(ValueEnum, Clone, Copy)]
enum FuncKind {
    #[value(name = "dP")]
    DP,
    #[value(name = "d2P")]
    D2P,
    #[value(name = "dQ")]
    DQ,
}

impl FuncKind {
    fn as_str(&self) -> &'static str {
        match self {
            FuncKind::DP => "dP",
            FuncKind::D2P => "d2P",
            FuncKind::DQ => "dQ",
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum CacheAction {
    Build,
    Clear,
    Stat,
}

/// Round-trip-safe float formatting with 17 significant digits.
fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Parses and runs the process command line.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Coeffs {
            poly,
            n,
            format,
            basis,
        } => cmd_coeffs(poly, n, format, basis),
        Command::Eval { func, n, z } => cmd_eval(func, n, &z),
        Command::Table { func, n_max, grid } => cmd_table(func, n_max, &grid),
        Command::Verify {
            suite,
            n_max,
            tol,
            seed,
        } => cmd_verify(&suite, n_max, tol, seed),
        Command::Cache {
            action,
            n_max,
            cache_dir,
        } => cmd_cache(action, n_max, cache_dir.as_deref()),
    }
}

fn cmd_coeffs(poly: PolyKind, n: u32, format: OutFormat, basis: BasisKind) -> i32 {
    let (name, series) = match poly {
        PolyKind::R => ("R", r_poly(n)),
        PolyKind::B => ("B", b_poly(n)),
        PolyKind::C => ("C", c_poly(n)),
    };
    // monomial coefficients print in descending powers, Legendre-basis
    // coefficients in ascending index
    let (basis_name, coeffs): (&str, Vec<Rational>) = match basis {
        BasisKind::Legendre => ("legendre", series.coeffs().to_vec()),
        BasisKind::Monomial => {
            let mut m = series.to_monomial();
            m.reverse();
            ("monomial", m)
        }
    };
    let rendered: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    match format {
        OutFormat::Csv => println!("{}", rendered.join(", ")),
        OutFormat::Json => {
            let quoted: Vec<String> = rendered.iter().map(|s| format!("\"{s}\"")).collect();
            println!(
                "{{\"poly\":\"{name}\",\"n\":{n},\"basis\":\"{basis_name}\",\"coefficients\":[{}]}}",
                quoted.join(",")
            );
        }
    }
    0
}

fn parse_point(z: &str) -> Result<(f64, f64), String> {
    let mut parts = z.split(',');
    let re = parts
        .next()
        .ok_or("empty point")?
        .trim()
        .parse::<f64>()
        .map_err(|e| format!("bad real part: {e}"))?;
    let im = match parts.next() {
        Some(s) => s
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad imaginary part: {e}"))?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err("too many components in point".into());
    }
    Ok((re, im))
}

/// Evaluates one function at one raw point under the strict domain rules.
fn eval_dispatch(func: FuncKind, n: i64, z: Complex64) -> Result<DerivativeResult, EvalError> {
    let need_nonneg = |n: i64| -> Result<u32, EvalError> {
        u32::try_from(n).map_err(|_| {
            EvalError::DomainError(format!(
                "{} requires a nonnegative degree, got {n}",
                func.as_str()
            ))
        })
    };
    match func {
        FuncKind::DP => {
            let n = need_nonneg(n)?;
            let point = EvalPoint::classify(z)?;
            dp_dnu(n, &point)
        }
        FuncKind::D2P => {
            let point = EvalPoint::classify(z)?;
            d2p_dnu2_anydeg(n, &point)
        }
        FuncKind::DQ => {
            let n = need_nonneg(n)?;
            if z.im == 0.0 && -1.0 < z.re && z.re < 1.0 {
                dq_dnu_oncut(n, z.re)
            } else {
                dq_dnu_offcut(n, z)
            }
        }
    }
}

fn cmd_eval(func: FuncKind, n: i64, z: &str) -> i32 {
    let (re, im) = match parse_point(z) {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("error: invalid point '{z}': {msg}");
            return 2;
        }
    };
    let z = Complex64::new(re, im);
    let z_json = format!(
        "\"z\":{{\"re\":{},\"im\":{}}}",
        fmt_f64(z.re),
        fmt_f64(z.im)
    );
    match eval_dispatch(func, n, z) {
        Ok(result) => {
            println!(
                "{{\"func\":\"{}\",\"n\":{},{},\"value\":{{\"re\":{},\"im\":{}}},\"formula\":\"{}\"}}",
                func.as_str(),
                result.n,
                z_json,
                fmt_f64(result.value.re),
                fmt_f64(result.value.im),
                result.formula.as_str()
            );
            0
        }
        Err(e) => {
            println!(
                "{{\"func\":\"{}\",\"n\":{},{},\"error\":\"{}\",\"message\":{}}}",
                func.as_str(),
                n,
                z_json,
                e.code(),
                serde_json::Value::String(e.to_string())
            );
            3
        }
    }
}

fn parse_axis(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("axis '{spec}' is not start:stop:count"));
    }
    let start: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|e| format!("bad start in '{spec}': {e}"))?;
    let stop: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|e| format!("bad stop in '{spec}': {e}"))?;
    let count: usize = parts[2]
        .trim()
        .parse()
        .map_err(|e| format!("bad count in '{spec}': {e}"))?;
    if count == 0 {
        return Err(format!("count must be positive in '{spec}'"));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let step = (stop - start) / (count - 1) as f64;
    Ok((0..count).map(|i| start + step * i as f64).collect())
}

fn parse_grid(spec: &str) -> Result<Vec<Complex64>, String> {
    let mut axes = spec.split('/');
    let re_axis = parse_axis(axes.next().ok_or("empty grid spec")?)?;
    let im_axis = match axes.next() {
        Some(s) => parse_axis(s)?,
        None => vec![0.0],
    };
    if axes.next().is_some() {
        return Err("grid spec has more than two axes".into());
    }
    let mut points = Vec::with_capacity(re_axis.len() * im_axis.len());
    for &im in &im_axis {
        for &re in &re_axis {
            points.push(Complex64::new(re, im));
        }
    }
    Ok(points)
}

fn cmd_table(func: FuncKind, n_max: u32, grid: &str) -> i32 {
    let points = match parse_grid(grid) {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("error: invalid grid '{grid}': {msg}");
            return 2;
        }
    };
    println!("n,z_re,z_im,value_re,value_im,error");
    for n in 0..=n_max {
        for &z in &points {
            match eval_dispatch(func, n as i64, z) {
                Ok(result) => println!(
                    "{n},{},{},{},{},",
                    fmt_f64(z.re),
                    fmt_f64(z.im),
                    fmt_f64(result.value.re),
                    fmt_f64(result.value.im)
                ),
                Err(e) => println!("{n},{},{},,,{}", fmt_f64(z.re), fmt_f64(z.im), e.code()),
            }
        }
    }
    0
}

fn cmd_verify(suite: &str, n_max: u32, tol: f64, seed: u64) -> i32 {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let report = run_suite(suite, n_max, tol, seed);
    println!("{report}");
    if report.all_passed() {
        0
    } else {
        1
    }
}

fn cmd_cache(action: CacheAction, n_max: Option<u32>, dir_flag: Option<&std::path::Path>) -> i32 {
    let dir = cache::resolve_dir(dir_flag);
    match action {
        CacheAction::Build => {
            let Some(n_max) = n_max else {
                eprintln!("error: cache build requires --n-max");
                return 2;
            };
            match cache::build(&dir, n_max) {
                Ok(stats) => {
                    println!(
                        "cache {}: wrote {} entries, kept {} valid entries",
                        dir.display(),
                        stats.written,
                        stats.skipped
                    );
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    4
                }
            }
        }
        CacheAction::Clear => match cache::clear(&dir) {
            Ok(removed) => {
                println!("cache {}: removed {removed} entries", dir.display());
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                4
            }
        },
        CacheAction::Stat => match cache::stat(&dir) {
            Ok(s) => {
                match s.max_n {
                    Some(m) => println!(
                        "cache {}: {} entries, max degree {m}",
                        dir.display(),
                        s.entries
                    ),
                    None => println!("cache {}: empty", dir.display()),
                }
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                4
            }
        },
    }
}
