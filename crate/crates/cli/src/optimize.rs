use crate::report::{emit, CliResult, Failure, Format, RunReport};
use crate::{parse_number, LfunArgs};
use clap::{Args, ValueEnum};
use serde::Serialize;
use slb_core::bounds::{BoundParameters, Target};
use slb_core::opt::{minimize_bound, optimize_nu, FreeVar, NuVariant, OptimizationReport};
use slb_core::selberg::EvaluationPoint;
use std::f64::consts::LN_2;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantArg {
    Cor9,
    Cor10,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum OptTarget {
    #[value(name = "logderiv")]
    LogDeriv,
    #[value(name = "logl")]
    LogL,
}

#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OptimizeArgs {
    /// Comma-separated subset of alpha, alpha1, nu1, nu2; or `nu` for the ν-pair objective.
    #[arg(long, value_delimiter = ',', required = true)]
    pub free: Vec<String>,
    /// `lo,hi` per free variable, in order; `log2` is accepted.
    #[arg(long = "box")]
    pub boxes: Vec<String>,
    #[arg(long, value_enum, default_value = "cor9")]
    pub variant: VariantArg,
    #[command(flatten)]
    #[serde(flatten)]
    pub lfun: LfunArgs,
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long, conflicts_with_all = ["logtau", "loglogtau"])]
    pub t: Option<f64>,
    #[arg(long, conflicts_with = "loglogtau")]
    pub logtau: Option<f64>,
    #[arg(long)]
    pub loglogtau: Option<f64>,
    #[arg(long, value_enum, default_value = "logderiv")]
    pub target: OptTarget,
    /// Base value of α for variables left fixed.
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub alpha1: Option<f64>,
    #[arg(long)]
    pub loglogtau0: Option<f64>,
    #[arg(long)]
    pub t0: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

fn default_box(v: FreeVar) -> (f64, f64) {
    match v {
        FreeVar::Alpha => (LN_2, 2.0),
        FreeVar::Alpha1 => (0.1, 3.0),
        FreeVar::Nu1 => (0.5, 10.0),
        FreeVar::Nu2 => (1.0 + 1e-6, 2.0),
    }
}

pub fn parse_box(s: &str) -> CliResult<(f64, f64)> {
    let (lo, hi) = s.split_once(',').ok_or_else(|| Failure::Usage(format!("box `{s}` must be `lo,hi`")))?;
    let lo = parse_number(lo).map_err(Failure::Usage)?;
    let hi = parse_number(hi).map_err(Failure::Usage)?;
    Ok((lo, hi))
}

pub fn optimize(args: &OptimizeArgs) -> CliResult<OptimizationReport> {
    if args.free.len() == 1 && args.free[0].trim().eq_ignore_ascii_case("nu") {
        if !args.boxes.is_empty() {
            return Err(Failure::Usage("the ν-pair objective uses fixed boxes; drop --box".into()));
        }
        let v = match args.variant {
            VariantArg::Cor9 => NuVariant::Cor9,
            VariantArg::Cor10 => NuVariant::Cor10,
        };
        return Ok(optimize_nu(v));
    }
    let vars = args.free.iter().map(|s| FreeVar::parse(s)).collect::<Result<Vec<_>, _>>()?;
    if args.boxes.len() > vars.len() {
        return Err(Failure::Usage(format!("{} boxes for {} free variables", args.boxes.len(), vars.len())));
    }
    let mut free = Vec::with_capacity(vars.len());
    for (k, &v) in vars.iter().enumerate() {
        let (lo, hi) = match args.boxes.get(k) {
            Some(b) => parse_box(b)?,
            None => default_box(v),
        };
        free.push((v, lo, hi));
    }
    let sigma = args.sigma.ok_or_else(|| Failure::Usage("--sigma is required".into()))?;
    let desc = args.lfun.resolve()?;
    let point = match (args.t, args.logtau, args.loglogtau) {
        (Some(t), ..) => EvaluationPoint::new(&desc, sigma, t)?,
        (_, Some(l), _) => EvaluationPoint::from_log_tau(sigma, l)?,
        (.., Some(ll)) => EvaluationPoint::from_log_log_tau(sigma, ll)?,
        _ => return Err(Failure::Usage("one of --t, --logtau, --loglogtau is required".into())),
    };
    let d = BoundParameters::default();
    let base = BoundParameters {
        alpha: args.alpha.unwrap_or(d.alpha),
        alpha1: args.alpha1.unwrap_or(d.alpha1),
        log_log_tau0: args.loglogtau0,
        t0: args.t0,
        ..d
    };
    let target = match args.target {
        OptTarget::LogDeriv => Target::LogDeriv,
        OptTarget::LogL => Target::LogL,
    };
    Ok(minimize_bound(&desc, &point, &free, &base, target)?)
}

pub fn run(args: OptimizeArgs) -> CliResult<()> {
    let started = Instant::now();
    let r = optimize(&args)?;
    let mut report = RunReport::new("optimize", &args, started);
    report.push(&r);
    let report = report.finish(true, started);
    emit(&report, args.format, |_| {
        for (k, name) in r.variable_names.iter().enumerate() {
            let (lo, hi) = r.bracket[k];
            println!("{name:<8} = {:.6}   in [{lo:.6}, {hi:.6}]", r.optimum[k]);
        }
        println!("objective = {:.6}  ({}, {} evaluations)", r.objective_value, r.method, r.iterations);
    });
    Ok(())
}
