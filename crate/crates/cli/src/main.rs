mod bound;
mod evaluate;
mod optimize;
mod report;
mod reproduce;
mod verify;

use clap::{Args, Parser, Subcommand};
use report::{CliResult, Failure};
use serde::Serialize;
use slb_core::selberg::{builtin, Builtin, DescriptorConfig, EvaluationPoint, LFunctionDescriptor};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "slb", version, about = "Explicit bounds for L'/L and log L under GRH, with verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the explicit bounds at one point.
    Bound(bound::BoundArgs),
    /// Run a verification suite.
    Verify(verify::VerifyArgs),
    /// Recompute a published constant and compare.
    Reproduce(reproduce::ReproduceArgs),
    /// Minimize a certified bound over free parameters.
    Optimize(optimize::OptimizeArgs),
    /// Evaluate L(s), L'/L(s) or log ζ(s) on a grid.
    Eval(evaluate::EvalArgs),
    /// Prime-coefficient statistics against li(x).
    Stats(evaluate::StatsArgs),
    /// Compute the first ζ-zero ordinates and write them to a file.
    GenZeros(evaluate::GenZerosArgs),
}

/// Which L-function: a builtin name or a JSON descriptor file.
#[derive(Args, Debug, Clone, Serialize)]
pub struct LfunArgs {
    /// `zeta`, `dirichlet(q,n)` or `product(A,B,...)`.
    #[arg(long, default_value = "zeta")]
    pub lfun: String,
    /// JSON descriptor file; overrides --lfun.
    #[arg(long)]
    pub descriptor: Option<PathBuf>,
}

impl LfunArgs {
    pub fn resolve(&self) -> CliResult<LFunctionDescriptor> {
        match &self.descriptor {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read descriptor {}: {e}", path.display())))?;
                Ok(DescriptorConfig::from_json(&text)?.into_descriptor()?)
            }
            None => Ok(builtin(&Builtin::parse(&self.lfun)?)?),
        }
    }

    pub fn is_zeta(&self) -> bool {
        self.descriptor.is_none() && self.lfun.trim().eq_ignore_ascii_case("zeta")
    }
}

/// Where to evaluate: `t`, or τ directly in log coordinates.
#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
#[group(required = true, multiple = false)]
pub struct HeightArgs {
    #[arg(long)]
    pub t: Option<f64>,
    /// log τ.
    #[arg(long)]
    pub logtau: Option<f64>,
    /// log log τ, for τ with no representable t.
    #[arg(long)]
    pub loglogtau: Option<f64>,
    /// Use t = 0 with τ replaced by the conductor.
    #[arg(long)]
    pub real_point: bool,
}

impl HeightArgs {
    pub fn point(&self, desc: &LFunctionDescriptor, sigma: f64) -> CliResult<EvaluationPoint> {
        let p = match (self.t, self.logtau, self.loglogtau) {
            (Some(t), ..) => EvaluationPoint::new(desc, sigma, t),
            (_, Some(l), _) => EvaluationPoint::from_log_tau(sigma, l),
            (.., Some(ll)) => EvaluationPoint::from_log_log_tau(sigma, ll),
            _ => EvaluationPoint::real_point(desc, sigma),
        };
        Ok(p?)
    }
}

/// Parses a float, also accepting `log2`.
pub fn parse_number(s: &str) -> Result<f64, String> {
    match s.trim() {
        "log2" | "ln2" => Ok(std::f64::consts::LN_2),
        other => other.parse().map_err(|_| format!("`{other}` is not a number")),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = match cli.command {
        Command::Bound(a) => bound::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Reproduce(a) => reproduce::run(a),
        Command::Optimize(a) => optimize::run(a),
        Command::Eval(a) => evaluate::run_eval(a),
        Command::Stats(a) => evaluate::run_stats(a),
        Command::GenZeros(a) => evaluate::run_gen_zeros(a),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.code())
        }
    }
}
