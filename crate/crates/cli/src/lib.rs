//! Command-line front end for `eposet`.

pub mod expr;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use eposet::catalog::{verify_catalog, verify_poset};
use eposet::classify::{
    classify, classify_eulerian_binomial, classify_eulerian_sheffer, classify_eulerian_triangular,
    ClassificationResult, ClassifyError,
};
use eposet::enumerate::*;
use eposet::profile::IntervalCensus;
use eposet::GradedPoset;
use serde_json::{json, Value};
use thiserror::Error;

pub use expr::{parse, EvalError, ParseError, PosetExpr};

#[derive(Debug, Parser)]
#[command(name = "eposet", version, about = "Build, analyze and classify Eulerian graded posets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression and write the poset as JSON
    Construct {
        #[arg(long)]
        expr: String,
        /// output file, `-` for stdout
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the Eulerian flag and the binomial, Sheffer and triangular profiles
    Analyze {
        #[arg(long)]
        expr: String,
    },
    /// Print the classification as JSON; exits 3 on an open case
    Classify {
        #[arg(long)]
        expr: String,
        /// force one classifier instead of trying binomial, Sheffer, triangular in turn
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Print a census of small posets or of rank-4 factorial solutions
    Enumerate {
        #[command(subcommand)]
        what: Census,
    },
    /// Run a verification suite; exits 4 on any failure
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        max_middle: usize,
        #[arg(long, default_value_t = MIN_RANK4_BOUND)]
        max_r: usize,
        /// the poset checked by `--suite poset`
        #[arg(long, required_if_eq("suite", "poset"))]
        expr: Option<String>,
    },
    /// Write the poset as Graphviz DOT or JSON
    Export {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum)]
        format: Format,
        /// output file, `-` for stdout
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Census {
    Rank3 {
        #[arg(long)]
        max_middle: usize,
    },
    Rank4 {
        #[arg(long)]
        max_r: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Binomial,
    Sheffer,
    Triangular,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Suite {
    Rank3,
    Rank4,
    Catalog,
    /// catalog identity checks on one poset, which must be Eulerian
    Poset,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Precondition(String),
    #[error("open case")]
    OpenCase,
    #[error("verification failed")]
    VerificationFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Eval(_) | CliError::Io { .. } => 1,
            CliError::Precondition(_) => 2,
            CliError::OpenCase => 3,
            CliError::VerificationFailed => 4,
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::InconsistentWithTheorems(d) => CliError::Precondition(format!("{d}")),
            e => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

fn build(text: &str) -> Result<GradedPoset, CliError> {
    Ok(parse(text)?.eval()?)
}

fn write_out(path: &Path, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    let result = if path == Path::new("-") { stdout.write_all(text.as_bytes()) } else { std::fs::write(path, text) };
    result.map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn print(stdout: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(v).expect("values serialize");
    writeln!(stdout, "{text}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

fn analyze(p: &GradedPoset) -> Value {
    let census = IntervalCensus::of(p);
    let entry = |r: Result<Value, String>| match r {
        Ok(profile) => json!({ "profile": profile }),
        Err(witness) => json!({ "witness": witness }),
    };
    json!({
        "elements": p.len(),
        "rank": p.rank(),
        "eulerian": p.is_eulerian(),
        "binomial": entry(census.binomial_profile().map(|x| json!(x)).map_err(|w| w.to_string())),
        "sheffer": entry(census.sheffer_profile().map(|x| json!(x)).map_err(|w| w.to_string())),
        "triangular": entry(census.triangular_profile().map(|x| json!(x)).map_err(|w| w.to_string())),
    })
}

fn rank3_census(max_middle: usize) -> Result<Value, CliError> {
    let posets = enumerate_rank3(max_middle)?;
    let mut counts: std::collections::BTreeMap<String, usize> = (2..=max_middle).map(|t| (t.to_string(), 0)).collect();
    let mut classes = Vec::new();
    for p in &posets {
        let t = p.elements_of_rank(1).len();
        *counts.entry(t.to_string()).or_default() += 1;
        let parts = match classify_eulerian_sheffer(p) {
            Ok(ClassificationResult::PolygonSum { parts }) => json!(parts),
            _ => Value::Null,
        };
        classes.push(json!({ "atoms": t, "elements": p.len(), "parts": parts }));
    }
    Ok(json!({ "suite": "rank3", "bound": max_middle, "counts": counts, "classes": classes }))
}

fn rank4_census(max_r: usize) -> Result<Value, CliError> {
    let solutions: Vec<Value> = enumerate_rank4_factorials(max_r)?
        .into_iter()
        .map(|s| {
            let (b3, d3, d4) = s.triple();
            let mut v = json!(s);
            v["case"] = json!(eposet::classify::rank4_case(b3, d3, d4).map(|(c, _)| c));
            v
        })
        .collect();
    Ok(json!({ "suite": "rank4", "bound": max_r, "solutions": solutions }))
}

/// Runs one command, writing its report to `stdout`. A classification that
/// ends in an open case is printed before `CliError::OpenCase` is returned,
/// and likewise a failing verification report.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Construct { expr, out } => write_out(&out, &eposet::io::to_json(&build(&expr)?), stdout),
        Command::Analyze { expr } => print(stdout, &analyze(&build(&expr)?)),
        Command::Classify { expr, kind } => {
            let p = build(&expr)?;
            let r = match kind {
                None => classify(&p),
                Some(Kind::Binomial) => classify_eulerian_binomial(&p),
                Some(Kind::Sheffer) => classify_eulerian_sheffer(&p),
                Some(Kind::Triangular) => classify_eulerian_triangular(&p),
            }?;
            print(stdout, &json!(r))?;
            match r {
                ClassificationResult::OpenCase { .. } => Err(CliError::OpenCase),
                _ => Ok(()),
            }
        }
        Command::Enumerate { what } => {
            let v = match what {
                Census::Rank3 { max_middle } => rank3_census(max_middle)?,
                Census::Rank4 { max_r } => rank4_census(max_r)?,
            };
            print(stdout, &v)
        }
        Command::Verify { suite, max_middle, max_r, expr } => {
            let report = match suite {
                Suite::Rank3 => verify_rank3_classification(max_middle)?,
                Suite::Rank4 => verify_rank4_classification(max_r)?,
                Suite::Catalog => verify_catalog(),
                Suite::Poset => {
                    let text = expr.expect("clap requires --expr for this suite");
                    verify_poset(&text, &build(&text)?)
                }
            };
            print(stdout, &json!(report))?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Export { expr, format, out } => {
            let p = build(&expr)?;
            let text = match format {
                Format::Dot => eposet::io::to_dot(&p),
                Format::Json => eposet::io::to_json(&p),
            };
            write_out(&out, &text, stdout)
        }
    }
}
