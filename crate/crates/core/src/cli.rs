//! Command-line front end.
//!
//! Exit codes: 0 success, 1 internal error, 2 malformed input, 3 failed verification.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::operators::{grothendieck_double, grothendieck_single};
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::stable::{halfweak_stable, qschur_expansion, qschur_stratum, stable_double, stable_single, TruncationSpec};
use crate::verify::{self, Suite, VerifyOptions};

pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "groth", about = "Grothendieck polynomials and the identities around them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a polynomial or expansion for one permutation.
    Compute(ComputeArgs),
    /// Run identity suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Object {
    Single,
    Double,
    StableSingle,
    StableDouble,
    Halfweak,
    Qschur,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    object: Object,
    /// One-line notation, comma separated.
    #[arg(long)]
    perm: String,
    /// Work in S_{n+1}; the permutation is extended by fixed points.
    #[arg(long)]
    n: Option<usize>,
    /// Variables per family for stable objects (default: the degree bound).
    #[arg(long)]
    m: Option<usize>,
    /// Degree bound; for qschur, the degree of the printed stratum.
    #[arg(long, default_value_t = 4)]
    degree: usize,
    /// For qschur, print every stratum up to --degree.
    #[arg(long)]
    all_degrees: bool,
    /// Read --perm as the inverse of the permutation meant.
    #[arg(long)]
    inverse: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: Option<String>,
    #[arg(long = "suite", conflicts_with = "suite")]
    suite_flag: Option<String>,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPermutation(_)
            | Error::GeneratorOutOfRange { .. }
            | Error::Parse(_)
            | Error::Constraint(_)
            | Error::NotStrict(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(&a, out).map(|()| 0),
        Command::Verify(a) => run_verify(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn permutation(a: &ComputeArgs) -> Result<Permutation, Failure> {
    let mut p: Permutation = a.perm.parse()?;
    if a.inverse {
        p = p.inverse();
    }
    if let Some(n) = a.n {
        if n + 1 < p.size() {
            return Err(Failure::Usage(format!("{p} does not fit in S_{}", n + 1)));
        }
        p = p.extend_to(n + 1)?;
    }
    Ok(p)
}

fn emit(out: &mut dyn Write, text: String) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::Internal(e.to_string()))
}

fn compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let omega = permutation(a)?;
    let t = || TruncationSpec::new(a.m.unwrap_or(a.degree.max(1)), a.degree);
    let poly = |p: Polynomial| if a.json { p.to_json().to_string() } else { p.to_string() };
    let text = match a.object {
        Object::Single => poly(grothendieck_single(&omega)),
        Object::Double => poly(grothendieck_double(&omega)),
        Object::StableSingle => poly(stable_single(&omega, t()?)),
        Object::StableDouble => poly(stable_double(&omega, t()?)),
        Object::Halfweak => poly(halfweak_stable(&omega, t()?)),
        Object::Qschur => {
            let q = if a.all_degrees { qschur_expansion(&omega, a.degree)? } else { qschur_stratum(&omega, a.degree)? };
            if a.json {
                q.to_json().to_string()
            } else {
                q.to_string()
            }
        }
    };
    emit(out, text)
}

fn run_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let name = a.suite.as_deref().or(a.suite_flag.as_deref()).unwrap_or("all");
    let suites: Vec<Suite> = if name == "all" { Suite::ALL.to_vec() } else { vec![name.parse()?] };
    let opts = VerifyOptions { n: a.n, m: a.m, degree: a.degree, trials: a.trials, seed: a.seed };
    let reports: Vec<_> = suites.iter().map(|&s| verify::run(s, &opts)).collect();
    let passed = reports.iter().all(|r| r.passed());
    if a.json {
        let all: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
        emit(out, json!({ "passed": passed, "suites": all }).to_string())?;
    } else {
        let text: String = reports.iter().map(|r| r.to_string()).collect();
        emit(out, format!("{}{}", text, if passed { "all checks passed" } else { "some checks failed" }))?;
    }
    Ok(if passed { 0 } else { EXIT_VERIFY })
}

/// Caps the global thread pool from `GROTH_THREADS`.
pub fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("GROTH_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().map_err(|_| format!("GROTH_THREADS={raw:?} is not a count"))?;
    if threads == 0 {
        return Err("GROTH_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}
