//! The `decdiag` command line.
//!
//! Every command prints one JSON document on stdout, pretty-printed with
//! sorted keys. Exit codes: 0 success, 1 the checked property fails,
//! 2 unreadable or malformed input, 3 internal failure.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::{
    certify_report, check_locally_decreasing, confluent_oracle, find_precedence, newman_labeling,
    verify, Certificate, Mode,
};
use crate::completion::{Completer, CompletionError};
use crate::format::{parse_ars, parse_path, parse_unlabeled_ars, ArsDocument};
use crate::lars::Peak;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Overrides the completion fuel.
pub const FUEL_ENV: &str = "DECDIAG_FUEL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Valley,
    Conv,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Valley => Mode::Valley,
            ModeArg::Conv => Mode::Conv,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "decdiag",
    version,
    about = "Decreasing diagrams for finite labeled rewrite systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Search a decreasing join for every local peak.
    Check {
        #[arg(long, value_enum, default_value = "valley")]
        mode: ModeArg,
        file: PathBuf,
    },
    /// Complete a peak into a decreasing diagram.
    Complete {
        file: PathBuf,
        /// Top side as `obj,label,obj,...`.
        #[arg(long)]
        left: String,
        /// Left side as `obj,label,obj,...`.
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value = "valley")]
        mode: ModeArg,
    },
    /// Decide confluence by brute force, ignoring labels.
    Oracle { file: PathBuf },
    /// Label a terminating, locally confluent system by source objects.
    Newman { file: PathBuf },
    /// Search a precedence making the system locally decreasing.
    FindPrec {
        #[arg(long, value_enum, default_value = "valley")]
        mode: ModeArg,
        file: PathBuf,
    },
    /// Produce a certificate for a locally decreasing system.
    Certify {
        #[arg(long, value_enum, default_value = "valley")]
        mode: ModeArg,
        file: PathBuf,
    },
    /// Re-check a certificate without search.
    Verify { cert: PathBuf },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl ToString) -> Self {
        Self {
            code,
            message: message.to_string(),
        }
    }
}

/// Rebuilds every object with its keys in sorted order.
fn sorted(value: Value) -> Value {
    match value {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, sorted(v))).collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sorted).collect()),
        other => other,
    }
}

fn to_json(value: impl serde::Serialize) -> Result<Value, Failure> {
    serde_json::to_value(value)
        .map(sorted)
        .map_err(|e| Failure::new(EXIT_INTERNAL, e))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ArsDocument, Failure> {
    parse_ars(&read(path)?)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn fuel_override() -> Result<Option<usize>, Failure> {
    match std::env::var(FUEL_ENV) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            Failure::new(
                EXIT_PARSE,
                format!("{FUEL_ENV} must be a number, got `{v}`"),
            )
        }),
        Err(_) => Ok(None),
    }
}

fn dispatch(command: Command) -> Result<(Value, i32), Failure> {
    match command {
        Command::Check { mode, file } => {
            let doc = load(&file)?;
            let report = check_locally_decreasing(&doc.ars(), &doc.precedence(), mode.into());
            let ok = report.all_decreasing();
            let mut value = to_json(&report)?;
            value["all_decreasing"] = json!(ok);
            Ok((value, if ok { EXIT_OK } else { EXIT_CHECK_FAILED }))
        }
        Command::Complete {
            file,
            left,
            right,
            mode,
        } => {
            let doc = load(&file)?;
            let (ars, prec) = (doc.ars(), doc.precedence());
            let path = |text: &str| parse_path(&ars, text).map_err(|e| Failure::new(EXIT_PARSE, e));
            let peak =
                Peak::new(path(&left)?, path(&right)?).map_err(|e| Failure::new(EXIT_PARSE, e))?;
            let report = check_locally_decreasing(&ars, &prec, mode.into());
            if !report.all_decreasing() {
                let failing: Vec<Peak> = report.failures().map(|p| p.peak.clone()).collect();
                return Err(Failure::new(
                    EXIT_CHECK_FAILED,
                    format!("system is not locally decreasing at {failing:?}"),
                ));
            }
            let internal = |e: CompletionError| Failure::new(EXIT_INTERNAL, e);
            let fuel = fuel_override()?;
            let (diagram, trace) = match Mode::from(mode) {
                Mode::Valley => {
                    let map = report.local_map(&ars, &prec).map_err(internal)?;
                    let mut c = Completer::valley(&ars, &prec, &map);
                    if let Some(f) = fuel {
                        c = c.with_fuel(f);
                    }
                    let d = c.complete_checked(&peak).map_err(internal)?;
                    (d, c.into_trace())
                }
                Mode::Conv => {
                    let map = report.conv_map(&ars, &prec).map_err(internal)?;
                    let mut c = Completer::conv(&ars, &prec, &map);
                    if let Some(f) = fuel {
                        c = c.with_fuel(f);
                    }
                    let d = c.complete_checked(&peak).map_err(internal)?;
                    (d, c.into_trace())
                }
            };
            Ok((
                to_json(json!({ "diagram": diagram, "trace": trace }))?,
                EXIT_OK,
            ))
        }
        Command::Oracle { file } => {
            let doc = load(&file)?;
            let confluent = confluent_oracle(&doc.unlabeled());
            let code = if confluent {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok((json!({ "confluent": confluent }), code))
        }
        Command::Newman { file } => {
            let text = read(&file)?;
            let doc = parse_unlabeled_ars(&text)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", file.display())))?;
            let (ars, prec) = newman_labeling(&doc.unlabeled())
                .map_err(|e| Failure::new(EXIT_CHECK_FAILED, e))?;
            let report = check_locally_decreasing(&ars, &prec, Mode::Valley);
            let cert =
                certify_report(&ars, &prec, &report).map_err(|e| Failure::new(EXIT_INTERNAL, e))?;
            let value = json!({
                "steps": ars,
                "precedence": prec,
                "certificate": cert,
            });
            Ok((to_json(value)?, EXIT_OK))
        }
        Command::FindPrec { mode, file } => {
            let doc = load(&file)?;
            match find_precedence(&doc.ars(), mode.into())
                .map_err(|e| Failure::new(EXIT_PARSE, e))?
            {
                Some(prec) => Ok((to_json(json!({ "precedence": prec }))?, EXIT_OK)),
                None => Ok((json!({ "precedence": "none" }), EXIT_CHECK_FAILED)),
            }
        }
        Command::Certify { mode, file } => {
            let doc = load(&file)?;
            let (ars, prec) = (doc.ars(), doc.precedence());
            let report = check_locally_decreasing(&ars, &prec, mode.into());
            let cert = certify_report(&ars, &prec, &report)
                .map_err(|e| Failure::new(EXIT_CHECK_FAILED, e))?;
            Ok((to_json(&cert)?, EXIT_OK))
        }
        Command::Verify { cert } => {
            let text = read(&cert)?;
            let cert: Certificate = serde_json::from_str(&text)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", cert.display())))?;
            let outcome = verify(&cert);
            let valid = outcome.is_valid();
            let value = json!({ "valid": valid, "failures": outcome.failures });
            Ok((
                to_json(value)?,
                if valid { EXIT_OK } else { EXIT_CHECK_FAILED },
            ))
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_PARSE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli.command) {
        Ok((value, code)) => {
            let text = serde_json::to_string_pretty(&value).expect("values always serialize");
            if writeln!(out, "{text}").is_err() {
                return EXIT_INTERNAL;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
