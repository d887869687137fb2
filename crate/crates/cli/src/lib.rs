//! Command-line front end: JSON algebra specs in, JSON reports out.
//!
//! Exit codes: `0` when every check passes, `1` when a check fails and `2`
//! for unreadable or invalid input.

pub mod commands;
pub mod report;
pub mod spec;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::commands::InputError;
use crate::report::{to_json, ErrorEntry, InputDigest, InputErrorReport};
use crate::spec::{parse_operator, parse_scalar_arg, parse_spec, AlgebraSpec};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twistalg", version, about = "Exact checks for crossed products, Wick algebras and Fock spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cross axioms, associativity and (for homogeneous crosses) the hexagon identities.
    Verify {
        spec: PathBuf,
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
    /// Wick-ordered words as a basis: strategy independence and closure.
    WickBasis {
        spec: PathBuf,
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
    /// The star-cross condition on the twist.
    StarCross { spec: PathBuf },
    /// Normal form of one word, e.g. `--word "x1* x2 x1"`.
    NormalForm {
        spec: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Fock-space Gram matrices for every degree up to `--degree`.
    Gram {
        spec: PathBuf,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// Certify positive semidefiniteness exactly.
        #[arg(long)]
        psd: bool,
    },
    /// Annihilators are adjoint to creators in the Fock inner product.
    Adjoint {
        spec: PathBuf,
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
    /// Graded dimensions of the crossed product of the declared quotients.
    Dims {
        spec: PathBuf,
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
    /// Consistency identities for relation operators R, S and a twist C.
    Consistency {
        #[arg(long)]
        r: PathBuf,
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        c: PathBuf,
    },
    /// The quantum Weyl algebra of a Hecke R-matrix.
    Weyl {
        #[arg(long)]
        r: PathBuf,
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::WickBasis { .. } => "wick-basis",
            Command::StarCross { .. } => "star-cross",
            Command::NormalForm { .. } => "normal-form",
            Command::Gram { .. } => "gram",
            Command::Adjoint { .. } => "adjoint",
            Command::Dims { .. } => "dims",
            Command::Consistency { .. } => "consistency",
            Command::Weyl { .. } => "weyl",
        }
    }
}

/// What a run printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Failure(Vec<ErrorEntry>);

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure(vec![ErrorEntry::plain("request", e.0)])
    }
}

fn read(path: &Path, label: &str) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure(vec![ErrorEntry::plain(label, format!("cannot read {}: {e}", path.display()))]))
}

fn load_spec(path: &Path, digest: &mut InputDigest) -> Result<AlgebraSpec, Failure> {
    let text = read(path, "spec")?;
    digest.add("spec", text.as_bytes());
    parse_spec(&text).map_err(|errs| Failure(errs.into_iter().map(|e| ErrorEntry::from_spec("spec", e)).collect()))
}

fn load_operator(path: &Path, label: &str, digest: &mut InputDigest) -> Result<twistalg::Operator, Failure> {
    let text = read(path, label)?;
    digest.add(label, text.as_bytes());
    parse_operator(&text).map_err(|errs| Failure(errs.into_iter().map(|e| ErrorEntry::from_spec(label, e)).collect()))
}

fn dispatch(command: &Command) -> Result<report::Report, Failure> {
    let mut digest = InputDigest::default();
    digest.add("command", command.name().as_bytes());
    let degree = |d: &mut InputDigest, n: usize| {
        d.add("degree", n.to_string().as_bytes());
    };
    let report = match command {
        Command::Verify { spec, degree: n } => {
            let s = load_spec(spec, &mut digest)?;
            degree(&mut digest, *n);
            commands::verify(&s, *n, digest.finish())?
        }
        Command::WickBasis { spec, degree: n } => {
            let s = load_spec(spec, &mut digest)?;
            degree(&mut digest, *n);
            commands::wick_basis(&s, *n, digest.finish())?
        }
        Command::StarCross { spec } => {
            let s = load_spec(spec, &mut digest)?;
            commands::star_cross(&s, digest.finish())?
        }
        Command::NormalForm { spec, word } => {
            let s = load_spec(spec, &mut digest)?;
            digest.add("word", word.as_bytes());
            commands::normal_form(&s, word, digest.finish())?
        }
        Command::Gram { spec, degree: n, psd } => {
            let s = load_spec(spec, &mut digest)?;
            degree(&mut digest, *n);
            digest.add("psd", psd.to_string().as_bytes());
            commands::gram(&s, *n, *psd, digest.finish())?
        }
        Command::Adjoint { spec, degree: n } => {
            let s = load_spec(spec, &mut digest)?;
            degree(&mut digest, *n);
            commands::adjoint(&s, *n, digest.finish())?
        }
        Command::Dims { spec, degree: n } => {
            let s = load_spec(spec, &mut digest)?;
            degree(&mut digest, *n);
            commands::dims(&s, *n, digest.finish())?
        }
        Command::Consistency { r, s, c } => {
            let r = load_operator(r, "r", &mut digest)?;
            let s = load_operator(s, "s", &mut digest)?;
            let c = load_operator(c, "c", &mut digest)?;
            commands::consistency(&r, &s, &c, digest.finish())?
        }
        Command::Weyl { r, q, degree: n } => {
            let op = load_operator(r, "r", &mut digest)?;
            let q = parse_scalar_arg(q).map_err(|e| Failure(vec![ErrorEntry::plain("q", e)]))?;
            digest.add("q", q.to_string().as_bytes());
            degree(&mut digest, *n);
            commands::weyl(&op, &q, *n, digest.finish())?
        }
    };
    Ok(report)
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            };
        }
    };
    let name = cli.command.name();
    match dispatch(&cli.command) {
        Ok(report) => {
            let code = if report.pass() { EXIT_PASS } else { EXIT_FAIL };
            Outcome { stdout: to_json(&report), stderr: String::new(), code }
        }
        Err(Failure(errors)) => {
            let stderr = errors
                .iter()
                .map(|e| if e.at.is_empty() { format!("error: {}: {}\n", e.source, e.message) } else { format!("error: {}: {}: {}\n", e.source, e.at, e.message) })
                .collect();
            Outcome { stdout: to_json(&InputErrorReport::new(name, errors)), stderr, code: EXIT_INPUT }
        }
    }
}
