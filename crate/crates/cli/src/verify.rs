use crate::report::{emit, print_checks, CliResult, Failure, Format, RunReport};
use clap::{Args, ValueEnum};
use serde::Serialize;
use slb_core::lfunc::{load_zeros, zeros_path, EvalConfig, ZeroDataset, ZEROS_ENV};
use slb_core::verify::{
    cor9_samples, selberg_grid, suite_cor9_empirical, suite_dominance, suite_gw_residual, suite_majorant,
    suite_prime_sums, suite_selberg_identity, suite_zero_sum, Suite, SuiteReport, MAJORANT_PAIRS,
};
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const DEFAULT_ZEROS: &str = "data/zeros1e5.txt";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridArg {
    Default,
    Small,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct VerifyArgs {
    /// selberg-identity, zero-sum, cor9-empirical, dominance, majorant, gw-residual or prime-sums.
    #[arg(value_parser = parse_suite)]
    #[serde(serialize_with = "suite_name")]
    pub suite: Suite,
    /// Zero ordinates file; falls back to $SLB_ZEROS_PATH, then data/zeros1e5.txt.
    #[arg(long)]
    pub zeros: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "default")]
    pub grid: GridArg,
    /// Residual tolerance for selberg-identity and gw-residual.
    #[arg(long, default_value_t = 1e-3)]
    pub tolerance: f64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).map_err(|e| e.to_string())
}

fn suite_name<S: serde::Serializer>(s: &Suite, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(s.name())
}

pub fn resolve_zeros(explicit: Option<&Path>) -> CliResult<ZeroDataset> {
    let path = match explicit {
        Some(p) => p.to_path_buf(),
        None => zeros_path(Some(Path::new(DEFAULT_ZEROS))).ok_or_else(|| {
            Failure::MissingData(format!("no zeros file: pass --zeros, set {ZEROS_ENV}, or provide {DEFAULT_ZEROS}"))
        })?,
    };
    if !path.exists() {
        return Err(Failure::MissingData(format!("zeros file {} not found", path.display())));
    }
    Ok(load_zeros(&path)?)
}

pub fn run_suite(args: &VerifyArgs) -> CliResult<SuiteReport> {
    let small = args.grid == GridArg::Small;
    let zeros = if args.suite.needs_zeros() { Some(resolve_zeros(args.zeros.as_deref())?) } else { None };
    let ds = || zeros.as_ref().expect("suite needs zeros");
    let r = match args.suite {
        Suite::ZeroSum => suite_zero_sum(ds())?,
        Suite::SelbergIdentity => {
            let mut grid = selberg_grid();
            if small {
                grid.truncate(3);
            }
            suite_selberg_identity(ds(), &grid, args.tolerance)?
        }
        Suite::GwResidual => suite_gw_residual(ds(), args.tolerance)?,
        Suite::Cor9Empirical => suite_cor9_empirical(&cor9_samples(if small { 2 } else { 10 }), &EvalConfig::default())?,
        Suite::Dominance => suite_dominance(if small { 5 } else { 20 })?,
        Suite::Majorant => suite_majorant(&MAJORANT_PAIRS, if small { 1000 } else { 10_000 })?,
        Suite::PrimeSums => suite_prime_sums(if small { 20 } else { 100 })?,
    };
    Ok(r)
}

pub fn run(args: VerifyArgs) -> CliResult<()> {
    let started = Instant::now();
    let suite = run_suite(&args)?;
    let pass = suite.pass;
    let mut report = RunReport::new("verify", &args, started);
    report.push(&suite);
    let report = report.finish(pass, started);
    emit(&report, args.format, |_| {
        println!("suite {}", suite.suite);
        print_checks(&suite.checks);
    });
    if pass {
        Ok(())
    } else {
        let n = suite.checks.iter().filter(|c| !c.pass).count();
        Err(Failure::Precondition(format!("{n} check(s) of suite {} failed", suite.suite)))
    }
}
