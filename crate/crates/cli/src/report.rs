use serde::{Deserialize, Serialize};
use serde_json::Value;
use slb_core::Error;
use std::fmt;
use std::time::Instant;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub command: String,
    pub inputs_echo: Value,
    pub results: Vec<Value>,
    pub pass: bool,
    pub wall_time: f64,
}

impl RunReport {
    pub fn new(command: &str, inputs: impl Serialize, started: Instant) -> Self {
        Self {
            command: command.to_string(),
            inputs_echo: serde_json::to_value(inputs).unwrap_or(Value::Null),
            results: Vec::new(),
            pass: true,
            wall_time: started.elapsed().as_secs_f64(),
        }
    }

    pub fn push(&mut self, item: impl Serialize) {
        self.results.push(serde_json::to_value(item).expect("results serialize"));
    }

    pub fn finish(mut self, pass: bool, started: Instant) -> Self {
        self.pass = pass;
        self.wall_time = started.elapsed().as_secs_f64();
        self
    }
}

/// Process outcome other than success, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Precondition(String),
    MissingData(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::MissingData(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Precondition(m) => write!(f, "precondition failed: {m}"),
            Failure::MissingData(m) => write!(f, "missing data: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ParseError(_) | Error::UnknownBuiltin(_) | Error::InvalidCharacter { .. } => {
                Failure::Usage(e.to_string())
            }
            Error::Io(_) => Failure::MissingData(e.to_string()),
            Error::NoCaseApplies(s) => Failure::Precondition(format!("σ-range condition: no case applies at σ = {s}")),
            Error::PreconditionFailed(m) => Failure::Precondition(m),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Table,
    Json,
}

pub fn emit(report: &RunReport, format: Format, table: impl FnOnce(&RunReport)) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).expect("report serializes")),
        Format::Table => {
            table(report);
            println!("pass: {}  ({:.3} s)", report.pass, report.wall_time);
        }
    }
}

/// `value ≤ limit` style rows shared by `verify` and `reproduce`.
pub fn print_checks(checks: &[slb_core::verify::Check]) {
    let width = checks.iter().map(|c| c.label.chars().count()).max().unwrap_or(5).max(5);
    println!("{:<width$}  {:>14}  {:>14}  pass", "check", "value", "limit");
    for c in checks {
        println!("{:<width$}  {:>14.6e}  {:>14.6e}  {}", c.label, c.value, c.limit, if c.pass { "yes" } else { "NO" });
    }
}
