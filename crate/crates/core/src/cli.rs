//! Command-line front end. Every command prints one JSON document on stdout.
//!
//! Exit codes: 0 success, 1 a verification found violations (the report is
//! still printed), 2 bad input (one line on stderr).

use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::bases::{basis_poly, combine, expand_in_basis, BasisFamily};
use crate::characterize::characterize_standard_czds;
use crate::corpus::{CorpusSpec, Mix};
use crate::counterexample::sharpness_counterexample;
use crate::de::basis_from_de;
use crate::error::{Error, Result};
use crate::operators::{euler, hermite_op, jacobi_op, laguerre_op, lmgen_op, phi, psi, DiffOp};
use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::sequences::{diagonal_apply, SequenceSpec};
use crate::verify::verify_sequence;
use crate::zeros::zero_counts;

/// Environment variable holding the number of verification worker threads.
pub const WORKERS_ENV: &str = "CZDS_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "czds",
    version,
    about = "Exact complex zero decreasing operators and sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Shared family and sequence parameters. Bases and sequences read the same
/// flags, so `--alpha` feeds both `jacobi-eigen` and the Jacobi basis.
#[derive(Args, Debug, Default, Clone)]
struct Params {
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basis polynomials b_0..b_n in the standard basis.
    Basis {
        /// Family name or basis JSON.
        #[arg(long)]
        basis: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: Params,
    },
    /// Coordinates of a polynomial in a basis.
    Expand {
        #[arg(long)]
        basis: String,
        #[command(flatten)]
        params: Params,
        /// Poly JSON or a file holding it; stdin when absent.
        poly: Option<String>,
    },
    /// Degree, real and non-real zero counts.
    Zeros { poly: Option<String> },
    /// Applies an operator and reports zero counts before and after.
    Apply {
        /// d, euler, phi, psi, jacobi, hermite, laguerre, lmgen, diagonal,
        /// or DiffOp JSON.
        #[arg(long)]
        op: String,
        #[command(flatten)]
        params: Params,
        /// Argument `a` of phi and psi.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        /// The `q` of the laguerre operator.
        #[arg(long)]
        q: Option<String>,
        /// Sequence for `--op diagonal`.
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, value_delimiter = ',')]
        m: Vec<u32>,
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        basis: Option<String>,
        poly: Option<String>,
    },
    /// Seeded Z_C non-increase campaign for a sequence in a basis.
    Verify {
        /// Sequence kind or sequence JSON.
        #[arg(long)]
        spec: String,
        #[arg(long, value_delimiter = ',')]
        m: Vec<u32>,
        #[arg(long)]
        h: Option<String>,
        /// Defaults to the sequence's own basis when it has one.
        #[arg(long)]
        basis: Option<String>,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "mixed")]
        mix: MixArg,
    },
    /// The family showing the Laguerre-type bound fails for negative alpha.
    Counterexample {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Decides whether {h(k)} is a CZDS for the standard basis.
    Characterize { h: Option<String> },
    /// Solves gamma_n b = q b^(r) + alpha q' b^(r-1) for n = 0..n_max.
    SolveDe {
        #[arg(long)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(clap::ValueEnum, Debug, Clone, Copy)]
enum MixArg {
    Mixed,
    RealRooted,
    MostlyNonReal,
}

impl From<MixArg> for Mix {
    fn from(m: MixArg) -> Mix {
        match m {
            MixArg::Mixed => Mix::Mixed,
            MixArg::RealRooted => Mix::RealRooted,
            MixArg::MostlyNonReal => Mix::MostlyNonReal,
        }
    }
}

enum Outcome {
    Ok(String),
    Violations(String),
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, S>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let text = e.to_string();
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("invalid arguments");
            let _ = writeln!(stderr, "{}", line.trim_start_matches("error: "));
            return 2;
        }
    };
    match execute(cli.command, stdin, stderr) {
        Ok(Outcome::Ok(json)) => {
            let _ = writeln!(stdout, "{json}");
            0
        }
        Ok(Outcome::Violations(json)) => {
            let _ = writeln!(stdout, "{json}");
            1
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string(value).map_err(|e| Error::Parse(e.to_string()))
}

fn execute(command: Command, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Result<Outcome> {
    let json = match command {
        Command::Basis { basis, n, params } => {
            let family = parse_basis(&basis, &params)?;
            let polys = (0..=n)
                .map(|k| basis_poly(&family, k))
                .collect::<Result<Vec<_>>>()?;
            to_json(&json!({ "basis": family, "polys": polys }))?
        }
        Command::Expand {
            basis,
            params,
            poly,
        } => {
            let family = parse_basis(&basis, &params)?;
            let p = read_poly(poly.as_deref(), stdin)?;
            let coords = expand_in_basis(&p, &family)?;
            debug_assert_eq!(combine(&coords, &family)?, p);
            let coords: Vec<String> = coords.iter().map(rational::to_string).collect();
            to_json(&json!({ "basis": family, "coords": coords }))?
        }
        Command::Zeros { poly } => {
            let p = read_poly(poly.as_deref(), stdin)?;
            to_json(&zero_counts(&p))?
        }
        Command::Apply {
            op,
            params,
            a,
            c,
            d,
            q,
            spec,
            m,
            h,
            basis,
            poly,
        } => {
            let p = read_poly(poly.as_deref(), stdin)?;
            let output = match op.as_str() {
                "d" => DiffOp::d().apply(&p),
                "euler" => euler().apply(&p),
                "phi" => phi(&required(&a, "a")?).apply(&p),
                "psi" => psi(&required(&a, "a")?).apply(&p),
                "jacobi" => jacobi_op(
                    &required(&params.alpha, "alpha")?,
                    &required(&params.beta, "beta")?,
                )
                .apply(&p),
                "hermite" => hermite_op(
                    &required(&params.beta, "beta")?,
                    &required(&c, "c")?,
                    &required(&d, "d")?,
                    &required(&params.alpha, "alpha")?,
                )
                .apply(&p),
                "laguerre" => {
                    let q = read_poly(Some(q.as_deref().ok_or_else(|| missing("q"))?), stdin)?;
                    laguerre_op(q, required(&params.alpha, "alpha")?).apply(&p)
                }
                "lmgen" => lmgen_op(
                    required(&c, "c")?,
                    required(&d, "d")?,
                    required(&params.beta, "beta")?,
                )
                .apply(&p),
                "diagonal" => {
                    let kind = spec.as_deref().ok_or_else(|| missing("spec"))?;
                    let seq = parse_spec(kind, &m, h.as_deref(), &params, stdin)?;
                    let family = match basis {
                        Some(b) => parse_basis(&b, &params)?,
                        None => seq.natural_basis().ok_or_else(|| missing("basis"))?,
                    };
                    diagonal_apply(&seq, &family, &p)?
                }
                other => parse_json::<DiffOp>(&load_text(other)?)?.apply(&p),
            };
            to_json(&json!({
                "input": p,
                "output": output,
                "before": zero_counts(&p),
                "after": zero_counts(&output),
            }))?
        }
        Command::Verify {
            spec,
            m,
            h,
            basis,
            params,
            count,
            max_degree,
            seed,
            mix,
        } => {
            let seq = parse_spec(&spec, &m, h.as_deref(), &params, stdin)?;
            let family = match basis {
                Some(b) => parse_basis(&b, &params)?,
                None => seq.natural_basis().ok_or_else(|| missing("basis"))?,
            };
            seq.validate()?;
            family.validate()?;
            let corpus = CorpusSpec::new(count, max_degree, seed)?.with_mix(mix.into());
            let report = with_workers(|| verify_sequence(&seq, &family, &corpus))?;
            let _ = writeln!(stderr, "{}", report.summary());
            let text = to_json(&report)?;
            return Ok(if report.passed() {
                Outcome::Ok(text)
            } else {
                Outcome::Violations(text)
            });
        }
        Command::Counterexample { alpha } => {
            to_json(&sharpness_counterexample(&rational::parse(&alpha)?)?)?
        }
        Command::Characterize { h } => {
            let h = read_poly(h.as_deref(), stdin)?;
            to_json(&characterize_standard_czds(&h)?)?
        }
        Command::SolveDe { q, alpha, n_max } => {
            let q = read_poly(Some(&q), stdin)?;
            to_json(&basis_from_de(&q, &rational::parse(&alpha)?, n_max)?)?
        }
    };
    Ok(Outcome::Ok(json))
}

#[cfg(feature = "parallel")]
fn with_workers<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let workers = std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok());
    match workers.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_workers<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    f()
}

fn missing(flag: &str) -> Error {
    Error::Parse(format!("missing --{flag}"))
}

fn required(value: &Option<String>, flag: &str) -> Result<Rational> {
    rational::parse(value.as_deref().ok_or_else(|| missing(flag))?)
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

/// Inline JSON is used as is; anything else names a file.
fn load_text(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg))
        .map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))
}

fn read_poly(arg: Option<&str>, stdin: &mut dyn Read) -> Result<Poly> {
    let text = match arg {
        Some("-") | None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            s
        }
        Some(a) => load_text(a)?,
    };
    parse_json(&text)
}

fn parse_basis(arg: &str, params: &Params) -> Result<BasisFamily> {
    let rat = |v: &Option<String>, flag: &str| required(v, flag);
    let family = match arg {
        "standard" => BasisFamily::Standard,
        "hermite" => BasisFamily::Hermite,
        "legendre" => BasisFamily::Legendre,
        "chebyshev-t" => BasisFamily::ChebyshevT,
        "chebyshev-u" => BasisFamily::ChebyshevU,
        "jacobi" => BasisFamily::jacobi(rat(&params.alpha, "alpha")?, rat(&params.beta, "beta")?),
        "ultraspherical" => BasisFamily::ultraspherical(rat(&params.lambda, "lambda")?),
        "gen-laguerre" => BasisFamily::gen_laguerre(rat(&params.alpha, "alpha")?),
        other => parse_json(&load_text(other)?)?,
    };
    family.validate()?;
    Ok(family)
}

fn parse_spec(
    arg: &str,
    m: &[u32],
    h: Option<&str>,
    params: &Params,
    stdin: &mut dyn Read,
) -> Result<SequenceSpec> {
    let rat = |v: &Option<String>, flag: &str| required(v, flag);
    let m = m.to_vec();
    let spec = match arg {
        "affine-shift" => SequenceSpec::AffineShift {
            alpha: rat(&params.alpha, "alpha")?,
        },
        "polynomial-interp" => SequenceSpec::PolynomialInterp {
            h: read_poly(Some(h.ok_or_else(|| missing("h"))?), stdin)?,
        },
        "jacobi-eigen" => SequenceSpec::JacobiEigen {
            alpha: rat(&params.alpha, "alpha")?,
            beta: rat(&params.beta, "beta")?,
        },
        "ultra-product" => SequenceSpec::UltraProduct {
            lambda: rat(&params.lambda, "lambda")?,
            m,
        },
        "legendre-product" => SequenceSpec::LegendreProduct { m },
        "cheby-t-product" => SequenceSpec::ChebyTProduct { m },
        "cheby-u-product" => SequenceSpec::ChebyUProduct { m },
        "laguerre-product" => SequenceSpec::LaguerreProduct { m },
        other => parse_json(&load_text(other)?)?,
    };
    spec.validate()?;
    Ok(spec)
}
