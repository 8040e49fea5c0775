//! The `tfn` command-line front end.
//!
//! [`run`] takes the argument list and the three standard streams so the
//! whole command can be driven in-process. Exit codes: 0 on success, 1 for
//! I/O failures, 2 for usage, parse and validation errors.

pub mod input;
pub mod output;

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::aggregate::{
    fta_bounds_witness, is_idempotent_witness, is_ot_increasing_witness, Aggregator, ArithmeticMean,
    OtMaximum, OtMinimum, Verdict, WeightVector, WeightedMean,
};
use crate::error::TfnError;
use crate::number::{Crisp, Tfn};
use crate::order::{classify_sign, compare_ot};
use crate::vector::TfnVector;

use input::{parse_input, InputError, TfnRecord};
use output::{OutputFormat, Renderer};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tfn", version, about = "Triangular fuzzy number arithmetic, ordering and aggregation")]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: OutputFormat,

    /// Print 17 significant digits instead of 12
    #[arg(long, global = true)]
    pub exact: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Aggregate all records into one TFN
    Aggregate(AggregateArgs),
    /// Print records in ascending OT order
    Sort(InputArg),
    /// Print the OT sign of each record
    Classify(InputArg),
    /// Print the alpha-cut of each record
    Cut(CutArgs),
    /// Add, subtract or scale records
    Arith(ArithArgs),
    /// Run the randomized averaging checks against an aggregation method
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Mean,
    Wmean,
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ArithOp {
    Add,
    Sub,
    Scale,
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Input file; standard input when omitted or `-`
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AggregateArgs {
    #[arg(long, value_enum)]
    pub method: Method,

    /// Comma-separated weights for `wmean`
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub weights: Option<Vec<f64>>,

    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CutArgs {
    /// Level in ]0, 1]
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,

    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ArithArgs {
    #[arg(value_enum)]
    pub op: ArithOp,

    /// Left operands
    pub input: PathBuf,

    /// Right operands, paired with the left ones by position
    pub other: Option<PathBuf>,

    /// Crisp right operand (the factor for `scale`)
    #[arg(long, allow_negative_numbers = true)]
    pub scalar: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub method: Method,

    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub weights: Option<Vec<f64>>,

    #[arg(long, default_value_t = 10_000)]
    pub trials: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(InputError),
    Library(TfnError),
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(message) => write!(f, "usage error: {message}"),
            CliError::Input(e) => e.fmt(f),
            CliError::Library(e) => e.fmt(f),
            CliError::Io { path, source } => write!(f, "cannot read {path}: {source}"),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e)
    }
}

impl From<TfnError> for CliError {
    fn from(e: TfnError) -> Self {
        CliError::Library(e)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(lines) => {
            for line in lines {
                if writeln!(stdout, "{line}").is_err() {
                    return EXIT_INTERNAL;
                }
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_records(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Vec<TfnRecord>, CliError> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        })?,
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io { path: "standard input".into(), source })?;
            text
        }
    };
    Ok(parse_input(&text)?)
}

fn values(records: &[TfnRecord]) -> Result<TfnVector, CliError> {
    TfnVector::new(records.iter().map(|r| r.value).collect())
        .map_err(|_| CliError::Usage("input contains no records".into()))
}

fn aggregator(method: Method, weights: Option<&Vec<f64>>) -> Result<Box<dyn Aggregator>, CliError> {
    match (method, weights) {
        (Method::Wmean, Some(w)) => Ok(Box::new(WeightedMean(WeightVector::new(w.clone())?))),
        (Method::Wmean, None) => Err(CliError::Usage("--method wmean requires --weights".into())),
        (_, Some(_)) => Err(CliError::Usage("--weights only applies to --method wmean".into())),
        (Method::Mean, None) => Ok(Box::new(ArithmeticMean)),
        (Method::Min, None) => Ok(Box::new(OtMinimum)),
        (Method::Max, None) => Ok(Box::new(OtMaximum)),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Vec<String>, CliError> {
    let out = Renderer::new(cli.format, cli.exact);
    match &cli.command {
        Command::Aggregate(args) => {
            let e = aggregator(args.method, args.weights.as_ref())?;
            let records = read_records(args.input.as_ref(), stdin)?;
            let result = e.apply(&values(&records)?)?;
            Ok(vec![out.tfn(&result)])
        }
        Command::Sort(args) => {
            let mut records = read_records(args.input.as_ref(), stdin)?;
            records.sort_by(|p, q| compare_ot(&p.value, &q.value));
            Ok(records.iter().map(|r| out.record(r)).collect())
        }
        Command::Classify(args) => {
            let records = read_records(args.input.as_ref(), stdin)?;
            Ok(records.iter().map(|r| out.sign(&r.id, classify_sign(&r.value))).collect())
        }
        Command::Cut(args) => {
            // reject a bad level even for empty input
            Tfn::ZERO.alpha_cut(args.alpha)?;
            let records = read_records(args.input.as_ref(), stdin)?;
            records
                .iter()
                .map(|r| Ok(out.cut(&r.id, args.alpha, &r.value.alpha_cut(args.alpha)?)))
                .collect()
        }
        Command::Arith(args) => arith(args, stdin, &out),
        Command::Check(args) => check(args, &out),
    }
}

fn arith(args: &ArithArgs, stdin: &mut dyn Read, out: &Renderer) -> Result<Vec<String>, CliError> {
    let scalar = args.scalar.map(Crisp::new).transpose()?;
    match (args.op, &args.other, scalar) {
        (ArithOp::Scale, None, Some(_)) => {}
        (ArithOp::Scale, _, _) => {
            return Err(CliError::Usage("scale takes one input file and --scalar".into()))
        }
        (_, Some(_), Some(_)) | (_, None, None) => {
            return Err(CliError::Usage(
                "add and sub take either a second input file or --scalar".into(),
            ))
        }
        _ => {}
    }
    let left = read_records(Some(&args.input), stdin)?;
    // right operand per left record; a crisp scalar is broadcast
    let right: Vec<Tfn> = match (&args.other, scalar) {
        (Some(path), _) => {
            let right = read_records(Some(path), stdin)?;
            if right.len() != left.len() {
                return Err(TfnError::DimensionMismatch { expected: left.len(), found: right.len() }.into());
            }
            right.into_iter().map(|r| r.value).collect()
        }
        (None, Some(r)) => vec![Tfn::crisp(r); left.len()],
        (None, None) => unreachable!("rejected above"),
    };
    left.iter()
        .zip(&right)
        .map(|(rec, rhs)| {
            let value = match (args.op, scalar) {
                (ArithOp::Add, _) => rec.value.checked_add(rhs)?,
                (ArithOp::Sub, _) => rec.value.checked_sub(rhs)?,
                (ArithOp::Scale, Some(r)) => rec.value.scale(r)?,
                (ArithOp::Scale, None) => unreachable!("rejected above"),
            };
            Ok(out.record(&TfnRecord::new(rec.id.clone(), value)))
        })
        .collect()
}

fn verdict_line(out: &Renderer, property: &str, verdict: &Verdict, trials: usize) -> String {
    out.verdict(property, verdict.holds(), trials, verdict.counterexample().map(|c| c.to_string()))
}

fn check(args: &CheckArgs, out: &Renderer) -> Result<Vec<String>, CliError> {
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let e = aggregator(args.method, args.weights.as_ref())?;
    let idempotent = is_idempotent_witness(e.as_ref(), args.trials, args.seed);
    let increasing = is_ot_increasing_witness(e.as_ref(), args.trials, args.seed);

    let bounds = fta_bounds_witness(e.as_ref(), args.trials, args.seed);
    Ok(vec![
        verdict_line(out, "idempotent", &idempotent, args.trials),
        verdict_line(out, "ot-increasing", &increasing, args.trials),
        verdict_line(out, "fta-bounds", &bounds, args.trials),
    ])
}

#[cfg(test)]
mod tests;
