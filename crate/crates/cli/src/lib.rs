//! Command-line front end: expression parsing, the `analyze`, `risch`,
//! `transform` and `batch` subcommands, and canonical JSON reports.

pub mod parser;
mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Deserialize;
use thiserror::Error;
use varobs_core::analyzer::{analyze, check_hk, AnalyzerError, Certificate, H1Interpretation};
use varobs_core::planar::{to_infinity_chart, FieldError, PlanarField};
use varobs_core::risch::{build_risch, RischOutcome};
use varobs_core::RischEquation;

use parser::{parse_poly_in, parse_ratfunc_in, ParseError, Scope};

pub use report::{analysis_report, risch_report, AnalysisOptions};

/// Exit code for bad input.
pub const EXIT_INPUT: i32 = 2;
/// Exit code for internal failures (I/O, solver disagreement).
pub const EXIT_INTERNAL: i32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Field(#[from] FieldError),
    #[error("{0}")]
    Analyzer(#[from] AnalyzerError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Analyzer(AnalyzerError::SolverDisagreement { .. }) | CliError::Write { .. } => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "varobs", version, about = "Exact obstructions to rational integrability of planar polynomial fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check (H1) and the Risch equations of orders 2..=kmax along y = phi(x).
    Analyze(AnalyzeArgs),
    /// Solve y' + (order−1)·alpha·y = beta over Q(x).
    Risch(RischArgs),
    /// Move a field to the chart at infinity.
    Transform(TransformArgs),
    /// Run one analysis per JSON line of the input file.
    Batch(BatchArgs),
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    /// Invariant curve y = phi(x), a rational function of x.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phi: String,
    #[arg(long, default_value_t = 2)]
    kmax: usize,
    /// Analyze the field obtained by moving the given one to the chart at infinity.
    #[arg(long)]
    at_infinity: bool,
    #[arg(long, default_value = "literal")]
    h1: H1Interpretation,
    /// Parameter substitution NAME=VALUE, repeatable.
    #[arg(long = "let", value_name = "NAME=VALUE")]
    lets: Vec<String>,
    /// Write the canonical JSON report here ("-" for standard output).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RischArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, default_value_t = 2)]
    order: usize,
    #[arg(long = "let", value_name = "NAME=VALUE")]
    lets: Vec<String>,
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TransformArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    /// Names of the two input variables.
    #[arg(long, default_value = "z1,z2")]
    vars: String,
    #[arg(long = "let", value_name = "NAME=VALUE")]
    lets: Vec<String>,
}

#[derive(Debug, Args)]
struct BatchArgs {
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Output file; standard output by default.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

/// One line of batch input.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchRecord {
    pub p: String,
    pub q: String,
    #[serde(default = "default_phi")]
    pub phi: String,
    #[serde(default = "default_kmax")]
    pub kmax: usize,
    #[serde(default)]
    pub at_infinity: bool,
    #[serde(default)]
    pub lets: BTreeMap<String, LetValue>,
    #[serde(default)]
    pub h1: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum LetValue {
    Int(i64),
    Text(String),
}

fn default_phi() -> String {
    "0".into()
}

fn default_kmax() -> usize {
    2
}

/// Parsed field, curve and options of one analysis.
fn prepare(
    p: &str,
    q: &str,
    phi: &str,
    lets: &[String],
) -> Result<(PlanarField, varobs_core::RatFunc, Scope), CliError> {
    let scope = Scope::xy().with_lets(lets)?;
    let field = PlanarField::new(parse_poly_in(p, &scope)?, parse_poly_in(q, &scope)?)?;
    let x_scope = Scope::x().with_lets(lets)?;
    let phi = parse_ratfunc_in(phi, &x_scope)?;
    Ok((field, phi, scope))
}

fn run_analysis(
    p: &str,
    q: &str,
    phi_text: &str,
    options: &AnalysisOptions,
    lets: &[String],
) -> Result<(Certificate, serde_json::Value), CliError> {
    let (field, phi, scope) = prepare(p, q, phi_text, lets)?;
    let cert = analyze(&field, &phi, options.kmax, options.at_infinity, options.h1)?;
    let report = analysis_report(&cert, options, scope.lets());
    Ok((cert, report))
}

fn write_json(path: &Path, value: &serde_json::Value, out: &mut dyn Write) -> Result<(), CliError> {
    let text = format!("{}\n", serde_json::to_string(value).expect("string keys"));
    if path == Path::new("-") {
        out.write_all(text.as_bytes())
    } else {
        fs::write(path, text)
    }
    .map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Write {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn cmd_analyze(a: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let options = AnalysisOptions {
        kmax: a.kmax,
        at_infinity: a.at_infinity,
        h1: a.h1,
        phi: a.phi.clone(),
        p: a.p.clone(),
        q: a.q.clone(),
    };
    let (cert, json) = run_analysis(&a.p, &a.q, &a.phi, &options, &a.lets)?;
    match &a.json {
        Some(path) if path == Path::new("-") => write_json(path, &json, out)?,
        Some(path) => {
            write_json(path, &json, out)?;
            emit(out, &report::summary(&cert))?;
        }
        None => emit(out, &report::summary(&cert))?,
    }
    Ok(0)
}

fn describe_outcome(o: &RischOutcome) -> String {
    let mut s = match (o.solution(), o.reason()) {
        (Some(h), _) => format!("rational solution {h}"),
        (None, Some(r)) => format!("no rational solution ({r})"),
        (None, None) => unreachable!("outcome is either solved or not"),
    };
    if let Some(c) = o.case {
        s.push_str(&format!(" [case {c}]"));
    }
    s
}

fn cmd_risch(a: &RischArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let scope = Scope::x().with_lets(&a.lets)?;
    let alpha = parse_ratfunc_in(&a.alpha, &scope)?;
    let beta = parse_ratfunc_in(&a.beta, &scope)?;
    if a.order < 2 {
        return Err(CliError::Usage(format!("--order must be at least 2, got {}", a.order)));
    }
    let eq: RischEquation = build_risch(&alpha, &beta, a.order).map_err(AnalyzerError::from)?;
    let (_, outcome) = check_hk(&alpha, &beta, a.order)?;
    let json = risch_report(&eq, &outcome, a.order);
    match &a.json {
        Some(path) if path == Path::new("-") => return write_json(path, &json, out).map(|_| 0),
        Some(path) => write_json(path, &json, out)?,
        None => {}
    }
    emit(
        out,
        &format!(
            "equation: {eq}\nsolver: {}\nresult: {}\n",
            json["outcome"]["solver"].as_str().unwrap_or_default(),
            describe_outcome(&outcome)
        ),
    )?;
    Ok(0)
}

fn cmd_transform(a: &TransformArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let names: Vec<&str> = a.vars.split(',').map(str::trim).collect();
    if names.len() != 2 || names.iter().any(|n| n.is_empty()) || names[0] == names[1] {
        return Err(CliError::Usage(format!("--vars expects two distinct names, got '{}'", a.vars)));
    }
    let scope = Scope::new(names).with_lets(&a.lets)?;
    let tilde = PlanarField::new(parse_poly_in(&a.p, &scope)?, parse_poly_in(&a.q, &scope)?)?;
    let (x, swapped) = to_infinity_chart(&tilde);
    let (p, q) = x.fmt_vars("x", "y");
    if swapped {
        emit(out, "note: first component vanishes; the two variables were exchanged\n")?;
    }
    emit(out, &format!("P = {p}\nQ = {q}\n"))?;
    Ok(0)
}

/// Analyzes one batch line; errors become `{"error", "line"}` objects.
fn batch_line(index: usize, line: &str) -> (bool, String) {
    let result = (|| -> Result<serde_json::Value, CliError> {
        let rec: BatchRecord =
            serde_json::from_str(line).map_err(|e| CliError::Usage(format!("invalid JSON record: {e}")))?;
        let h1 = match &rec.h1 {
            Some(s) => s.parse().map_err(CliError::Usage)?,
            None => H1Interpretation::default(),
        };
        let lets: Vec<String> = rec
            .lets
            .iter()
            .map(|(k, v)| match v {
                LetValue::Int(i) => format!("{k}={i}"),
                LetValue::Text(t) => format!("{k}={t}"),
            })
            .collect();
        let options = AnalysisOptions {
            kmax: rec.kmax,
            at_infinity: rec.at_infinity,
            h1,
            phi: rec.phi.clone(),
            p: rec.p.clone(),
            q: rec.q.clone(),
        };
        run_analysis(&rec.p, &rec.q, &rec.phi, &options, &lets).map(|(_, json)| json)
    })();
    let (ok, value) = match result {
        Ok(v) => (true, v),
        Err(e) => (false, serde_json::json!({ "error": e.to_string(), "line": index + 1 })),
    };
    (ok, serde_json::to_string(&value).expect("string keys"))
}

fn cmd_batch(a: &BatchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = fs::read_to_string(&a.input).map_err(|source| CliError::Read {
        path: a.input.clone(),
        source,
    })?;
    let lines: Vec<&str> = text.lines().collect();
    let results: Vec<(bool, String)> = lines.par_iter().enumerate().map(|(i, l)| batch_line(i, l)).collect();
    let mut body = String::new();
    for (_, line) in &results {
        body.push_str(line);
        body.push('\n');
    }
    match &a.output {
        Some(path) => fs::write(path, body).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        })?,
        None => emit(out, &body)?,
    }
    Ok(if results.iter().all(|(ok, _)| *ok) { 0 } else { EXIT_INPUT })
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return if code == 0 { 0 } else { EXIT_INPUT };
        }
    };
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Risch(a) => cmd_risch(a, out),
        Command::Transform(a) => cmd_transform(a, out),
        Command::Batch(a) => cmd_batch(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
