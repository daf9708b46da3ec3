use crate::report::{emit, CliResult, Failure, Format, RunReport};
use crate::{HeightArgs, LfunArgs};
use clap::{Args, ValueEnum};
use serde::Serialize;
use slb_core::bounds::{
    asymptotic_main_terms, bound_case, bound_line1, bound_main, bound_real_point, family_cor10, zeta_cor9,
    AsymptoticInputs, AsymptoticTheorem, BoundParameters, BoundResult, CaseTag,
};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseArg {
    /// ζ with explicit t uses the numeric ζ bounds; otherwise the σ-ranges decide.
    Auto,
    Case1,
    Case2,
    Case3,
    Line1,
    RealPoint,
    Cor9,
    Cor10,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum TargetArg {
    Both,
    #[value(name = "logderiv")]
    LogDeriv,
    #[value(name = "logl")]
    LogL,
}

#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub lfun: LfunArgs,
    #[arg(long)]
    pub sigma: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub height: HeightArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub case: CaseArg,
    #[arg(long, value_enum, default_value = "both")]
    pub target: TargetArg,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub alpha1: Option<f64>,
    #[arg(long)]
    pub alpha2: Option<f64>,
    #[arg(long)]
    pub alpha3: Option<f64>,
    #[arg(long)]
    pub nu1: Option<f64>,
    #[arg(long)]
    pub nu2: Option<f64>,
    /// log log τ₀ (defaults to the point's own).
    #[arg(long)]
    pub loglogtau0: Option<f64>,
    /// t₀ (defaults to |t|).
    #[arg(long)]
    pub t0: Option<f64>,
    /// ε for the general strip statement.
    #[arg(long, default_value_t = 0.0)]
    pub epsilon: f64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

impl BoundArgs {
    pub fn parameters(&self) -> BoundParameters {
        let d = BoundParameters::default();
        BoundParameters {
            alpha: self.alpha.unwrap_or(d.alpha),
            alpha1: self.alpha1.unwrap_or(d.alpha1),
            alpha2: self.alpha2.unwrap_or(d.alpha2),
            alpha3: self.alpha3.unwrap_or(d.alpha3),
            nu1: self.nu1.unwrap_or(d.nu1),
            nu2: self.nu2.unwrap_or(d.nu2),
            log_log_tau0: self.loglogtau0,
            t0: self.t0,
            case_hint: None,
        }
    }
}

fn theorem(c: CaseArg) -> Option<AsymptoticTheorem> {
    Some(match c {
        CaseArg::Thm1 => AsymptoticTheorem::Thm1,
        CaseArg::Thm2 => AsymptoticTheorem::Thm2,
        CaseArg::Thm3 => AsymptoticTheorem::Thm3,
        CaseArg::Thm4 => AsymptoticTheorem::Thm4,
        CaseArg::Thm5 => AsymptoticTheorem::Thm5,
        CaseArg::Thm6 => AsymptoticTheorem::Thm6,
        _ => return None,
    })
}

/// Both targets for the requested regime.
pub fn evaluate(args: &BoundArgs) -> CliResult<(BoundResult, BoundResult)> {
    let desc = args.lfun.resolve()?;
    let params = args.parameters();
    if args.case == CaseArg::RealPoint {
        return Ok(bound_real_point(&desc, &params)?);
    }
    let point = args.height.point(&desc, args.sigma)?;
    let case = match args.case {
        CaseArg::Auto if args.lfun.is_zeta() && args.height.t.is_some() && args.sigma < 1.0 => CaseArg::Cor9,
        CaseArg::Auto if args.sigma == 1.0 => CaseArg::Line1,
        c => c,
    };
    let r = match case {
        CaseArg::Auto => bound_main(&desc, &point, &params)?,
        CaseArg::Cor9 => {
            if !args.lfun.is_zeta() {
                return Err(Failure::Precondition("case cor9 is specific to ζ".into()));
            }
            if args.alpha.is_some_and(|a| a != 1.278) {
                return Err(Failure::Precondition("case cor9 fixes α = 1.278".into()));
            }
            let t = args.height.t.ok_or_else(|| Failure::Usage("case cor9 needs --t".into()))?;
            zeta_cor9(args.sigma, t)?
        }
        CaseArg::Cor10 => {
            let f = family_cor10(&desc, &point)?;
            if args.sigma == 1.0 {
                (f.log_deriv_line1, f.log_l_line1)
            } else {
                (f.log_deriv, f.log_l)
            }
        }
        CaseArg::Line1 => bound_line1(&desc, &point, &params)?,
        CaseArg::Case1 => bound_case(&desc, &point, &params, CaseTag::Case1)?,
        CaseArg::Case2 => bound_case(&desc, &point, &params, CaseTag::Case2)?,
        CaseArg::Case3 => bound_case(&desc, &point, &params, CaseTag::Case3)?,
        c => {
            let which = theorem(c).expect("remaining cases are theorems");
            let inputs = AsymptoticInputs { alpha: params.alpha, epsilon: args.epsilon, ..Default::default() };
            asymptotic_main_terms(&desc, &point, which, &inputs)?
        }
    };
    Ok(r)
}

fn print_table(results: &[BoundResult]) {
    for r in results {
        let target = serde_json::to_value(r.target).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
        println!("{target} [{}]  value = {:.6}  certified = {}", r.case_tag, r.value, r.certified);
        for t in &r.terms {
            println!("    {:<48} {:>16.6}", t.label, t.value);
        }
        for p in r.preconditions.iter().filter(|p| !p.pass) {
            println!("    FAILED: {}", p.text);
        }
        if !r.assumptions.is_empty() {
            println!("    assumes: {}", r.assumptions.join("; "));
        }
        for s in &r.symbolic_terms {
            println!("    + {s}");
        }
    }
}

pub fn run(args: BoundArgs) -> CliResult<()> {
    let started = Instant::now();
    let (ld, lg) = evaluate(&args)?;
    let results: Vec<BoundResult> = match args.target {
        TargetArg::Both => vec![ld, lg],
        TargetArg::LogDeriv => vec![ld],
        TargetArg::LogL => vec![lg],
    };
    let pass = results.iter().all(|r| r.certified);
    let mut report = RunReport::new("bound", &args, started);
    for r in &results {
        report.push(r);
    }
    let report = report.finish(pass, started);
    emit(&report, args.format, |_| print_table(&results));
    if pass {
        Ok(())
    } else {
        let mut failed: Vec<&str> = results.iter().flat_map(|r| r.failed_conditions()).collect();
        failed.dedup();
        Err(Failure::Precondition(failed.join("; ")))
    }
}
