//! The `prokit` command line: file-format glue over the library.
//!
//! Exit codes: `0` success or accept, `1` reject or failed checks, `2` input
//! that does not parse, `3` shape or other semantic errors. Results go to
//! stdout as JSON, a one-line summary to stderr.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::automata::{ProAutomaton, WordAutomaton};
use crate::checks::{self, CheckConfig, Suite};
use crate::circuit::{enumerate_circuits, is_connected, Signature, Term};
use crate::error::Error;
use crate::quantum_gates as qg;
use crate::represent::Representation;
use crate::semiring::{Boolean, ComplexF64, Natural, Rational, RationalFunction, Semiring, SemiringKind};
use crate::temperley_lieb as tl;

macro_rules! dispatch {
    ($kind:expr, $S:ident => $body:expr) => {
        match $kind {
            SemiringKind::Boolean => {
                type $S = Boolean;
                $body
            }
            SemiringKind::Natural => {
                type $S = Natural;
                $body
            }
            SemiringKind::Rational => {
                type $S = Rational;
                $body
            }
            SemiringKind::Complex => {
                type $S = ComplexF64;
                $body
            }
            SemiringKind::RationalFunction => {
                type $S = RationalFunction;
                $body
            }
        }
    };
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write `{path}`: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("`{path}` is not valid JSON: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Read { .. } | CliError::Json { .. } | CliError::Usage(_) | CliError::Lib(Error::Parse(_)) => 2,
            CliError::Write { .. } | CliError::Lib(_) => 3,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LangOp {
    Union,
    Intersect,
}

#[derive(Debug, Parser)]
#[command(name = "prokit", version, about = "Hypermatrix PROs, circuit representations and automata")]
pub struct Cli {
    /// Seed for every randomized suite.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Absolute tolerance for complex comparisons.
    #[arg(long, global = true, default_value_t = crate::semiring::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a circuit under a representation.
    Eval {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        circuit: PathBuf,
        /// Output multi-index, e.g. `1,2`; prints one entry with `--in`.
        #[arg(long = "out", value_delimiter = ',')]
        out_index: Option<Vec<usize>>,
        #[arg(long = "in", value_delimiter = ',')]
        in_index: Option<Vec<usize>>,
    },
    /// Run an invariant suite.
    Check {
        #[arg(default_value = "all")]
        suite: String,
        /// Random instances per law.
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
    /// Decide membership of a circuit in a PRO automaton.
    Accept {
        #[arg(long)]
        automaton: PathBuf,
        #[arg(long)]
        circuit: PathBuf,
    },
    /// Coefficient of a word in the series of a word automaton.
    Behavior {
        #[arg(long)]
        automaton: PathBuf,
        /// One letter per character, or letters separated by commas.
        #[arg(long, default_value = "")]
        word: String,
        /// Semiring of the automaton file when it carries no tag.
        #[arg(long)]
        semiring: Option<String>,
    },
    /// Intersection or union of two PRO automata.
    Lang {
        #[arg(long, value_enum)]
        op: LangOp,
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare traces of Temperley-Lieb words with the closure count.
    TlConjecture {
        #[arg(long, default_value_t = 6)]
        max_gens: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Include every row, not only the counts and shortest counterexample.
        #[arg(long)]
        rows: bool,
    },
    /// The CNOT network, its unitarity and an entangled state.
    QuantumDemo,
    /// List the circuits over a signature up to isomorphism.
    Enumerate {
        #[arg(long)]
        signature: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_chips: usize,
        #[arg(long = "out", default_value_t = 1)]
        out_arity: usize,
        #[arg(long = "in", default_value_t = 1)]
        in_arity: usize,
        #[arg(long)]
        connected: bool,
    },
}

/// What a command produced: the JSON result, a summary line and the code.
pub struct Outcome {
    pub value: Value,
    pub summary: String,
    pub code: u8,
}

impl Outcome {
    fn ok(value: Value, summary: impl Into<String>) -> Self {
        Outcome { value, summary: summary.into(), code: 0 }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    ExitCode::from(run(&cli, &mut stdout, &mut stderr))
}

/// Runs a parsed command line, writing to the given streams; returns the
/// exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    match execute(cli) {
        Ok(o) => {
            let text = match cli.format {
                Format::Json => o.value.to_string(),
                Format::Pretty => serde_json::to_string_pretty(&o.value).expect("serializable"),
            };
            let _ = writeln!(stdout, "{text}");
            let _ = writeln!(stderr, "{}", o.summary);
            o.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Eval { rep, circuit, out_index, in_index } => {
            let rep_json = read_json(rep)?;
            let circuit_json = read_json(circuit)?;
            let kind = tagged_kind(&rep_json)?.unwrap_or(SemiringKind::Natural);
            let index = match (out_index, in_index) {
                (Some(o), Some(i)) => Some((o.clone(), i.clone())),
                (None, None) => None,
                (o, i) => Some((o.clone().unwrap_or_default(), i.clone().unwrap_or_default())),
            };
            dispatch!(kind, S => eval_cmd::<S>(&rep_json, &circuit_json, index))
        }
        Command::Check { suite, cases } => {
            let suite: Suite = suite.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
            let cfg = CheckConfig { seed: cli.seed, tolerance: cli.tolerance, cases: *cases };
            let report = checks::run(suite, &cfg)?;
            let failed = report.outcomes.iter().filter(|o| !o.passed()).count();
            let summary = format!("{suite}: {} laws, {failed} failed (seed {})", report.outcomes.len(), report.seed);
            Ok(Outcome { value: report.to_json(), summary, code: u8::from(failed > 0) })
        }
        Command::Accept { automaton, circuit } => {
            let a = read_json(automaton)?;
            let c = read_json(circuit)?;
            let kind = a.get("mu").map(tagged_kind).transpose()?.flatten().unwrap_or(SemiringKind::Boolean);
            dispatch!(kind, S => accept_cmd::<S>(&a, &c))
        }
        Command::Behavior { automaton, word, semiring } => {
            let a = read_json(automaton)?;
            let forced = semiring
                .as_deref()
                .map(|s| SemiringKind::parse(s).ok_or_else(|| CliError::Usage(format!("unknown semiring `{s}`"))))
                .transpose()?;
            let letters: Vec<String> = if word.contains(',') {
                word.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
            } else {
                word.chars().map(String::from).collect()
            };
            let kind = match forced.or(tagged_kind(&a)?) {
                Some(k) => k,
                None => infer_word_kind(&a)?,
            };
            dispatch!(kind, S => behavior_cmd::<S>(&a, &letters))
        }
        Command::Lang { op, left, right, output } => {
            let (l, r) = (read_json(left)?, read_json(right)?);
            let kind = l.get("mu").map(tagged_kind).transpose()?.flatten().unwrap_or(SemiringKind::Boolean);
            let outcome = dispatch!(kind, S => lang_cmd::<S>(*op, &l, &r))?;
            if let Some(path) = output {
                let text = serde_json::to_string_pretty(&outcome.value).expect("serializable");
                fs::write(path, text).map_err(|source| CliError::Write { path: path.clone(), source })?;
            }
            Ok(outcome)
        }
        Command::TlConjecture { max_gens, max_n, rows } => {
            let report = tl::conjecture_experiment(*max_gens, *max_n)?;
            let mut value = report.to_json();
            if !rows {
                value.as_object_mut().expect("object").remove("rows");
            }
            value["max_gens"] = json!(max_gens);
            value["max_n"] = json!(max_n);
            let summary = format!(
                "{} of {} terms agree ({:.1}%), recorded as an experiment",
                report.agreements(),
                report.total(),
                100.0 * report.agreement_rate()
            );
            Ok(Outcome::ok(value, summary))
        }
        Command::QuantumDemo => quantum_demo(cli.tolerance),
        Command::Enumerate { signature, max_chips, out_arity, in_arity, connected } => {
            let sig = Signature::from_json(&read_json(signature)?)?;
            let terms: Vec<Term> = enumerate_circuits(&sig, *max_chips, *out_arity, *in_arity)
                .into_iter()
                .filter(|t| !connected || is_connected(t))
                .collect();
            let summary = format!("{} circuits of arity ({out_arity},{in_arity}) with at most {max_chips} chips", terms.len());
            Ok(Outcome::ok(json!(terms.iter().map(Term::to_json).collect::<Vec<_>>()), summary))
        }
    }
}

fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.to_path_buf(), source })
}

fn tagged_kind(v: &Value) -> CliResult<Option<SemiringKind>> {
    match v.get("semiring") {
        None => Ok(None),
        Some(t) => t
            .as_str()
            .and_then(SemiringKind::parse)
            .map(Some)
            .ok_or_else(|| CliError::Lib(Error::Parse(format!("unknown semiring tag {t}")))),
    }
}

fn infer_word_kind(v: &Value) -> CliResult<SemiringKind> {
    for kind in [SemiringKind::Boolean, SemiringKind::Natural, SemiringKind::Rational, SemiringKind::Complex] {
        let ok = dispatch!(kind, S => WordAutomaton::<S>::from_json(v).is_ok());
        if ok {
            return Ok(kind);
        }
    }
    Err(CliError::Lib(Error::Parse("word automaton entries fit no semiring".into())))
}

/// A circuit file is a term, or `{"term": .., "signature": ..}`.
fn parse_circuit(v: &Value, sig: &Signature) -> CliResult<Term> {
    let term = v.get("term").unwrap_or(v);
    let t = Term::from_json(term, sig).map_err(|e| match e {
        Error::UnknownChip(_) | Error::Arity(_) | Error::Shape(_) => e,
        other => Error::Parse(other.to_string()),
    })?;
    Ok(t)
}

fn eval_cmd<S: Semiring>(rep: &Value, circuit: &Value, index: Option<(Vec<usize>, Vec<usize>)>) -> CliResult<Outcome> {
    let mu = Representation::<S>::from_json(rep).map_err(|e| Error::Parse(e.to_string()))?;
    let sig = match circuit.get("signature") {
        Some(s) => Signature::from_json(s)?,
        None => mu.signature(),
    };
    let t = parse_circuit(circuit, &sig)?;
    let value = mu.eval(&t)?;
    match index {
        Some((o, i)) => {
            let x = value.get(&o, &i)?;
            Ok(Outcome::ok(x.to_json(), format!("entry {o:?}/{i:?} of {t}: {x}")))
        }
        None => {
            let (d, p, q) = value.shape();
            Ok(Outcome::ok(value.to_json(), format!("{t} evaluates in K({d},{p},{q}) over {}", S::KIND)))
        }
    }
}

fn accept_cmd<S: Semiring>(a: &Value, circuit: &Value) -> CliResult<Outcome> {
    let a = ProAutomaton::<S>::from_json(a)?;
    let t = parse_circuit(circuit, &a.signature())?;
    let accepted = a.accepts(&t)?;
    let weight = a.weighted_accept(&t)?;
    let value = json!({"accepted": accepted, "weight": weight.to_json(), "arity": [t.out_arity(), t.in_arity()]});
    let summary = format!("{} {t}", if accepted { "accepted" } else { "rejected" });
    Ok(Outcome { value, summary, code: u8::from(!accepted) })
}

fn behavior_cmd<S: Semiring>(a: &Value, word: &[String]) -> CliResult<Outcome> {
    let a = WordAutomaton::<S>::from_json(a)?;
    let c = a.behavior_coeff(word)?;
    let shown: String = word.join(if word.iter().any(|l| l.len() > 1) { "," } else { "" });
    Ok(Outcome::ok(json!({"word": word, "coefficient": c.to_json(), "value": c.to_string()}), format!("coefficient of `{shown}` is {c}")))
}

fn lang_cmd<S: Semiring>(op: LangOp, l: &Value, r: &Value) -> CliResult<Outcome> {
    let (a, b) = (ProAutomaton::<S>::from_json(l)?, ProAutomaton::<S>::from_json(r)?);
    let c = match op {
        LangOp::Intersect => a.intersect(&b)?,
        LangOp::Union => a.union(&b)?,
    };
    let summary = format!("{:?} of automata with {} and {} states has {} states", op, a.dim(), b.dim(), c.dim()).to_lowercase();
    Ok(Outcome::ok(c.to_json(), summary))
}

fn quantum_demo(tol: f64) -> CliResult<Outcome> {
    let c = qg::cnot_matrix();
    let mut rows = Vec::new();
    for out in [[0, 0], [0, 1], [1, 0], [1, 1]] {
        let mut row = Vec::new();
        for inp in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            let x = qg::entry(&c, &out, &inp)?;
            row.push(json!([x.0.re, x.0.im]));
        }
        rows.push(Value::Array(row));
    }
    let residual = qg::unitarity_residual(&c)?;
    let phi = qg::QubitState::basis_sum(2, &[&[0, 0], &[0, 1]])?;
    let out = phi.apply(&c)?;
    let value = json!({
        "network": qg::cnot_network().to_json(),
        "cnot": rows,
        "unitarity_residual": residual,
        "input": phi.to_json(),
        "output": out.to_json(),
        "input_is_product": phi.is_product(tol)?,
        "output_is_product": out.is_product(tol)?,
    });
    Ok(Outcome::ok(value, format!("CNOT residual {residual:.1e}; {phi} ↦ {out}")))
}
