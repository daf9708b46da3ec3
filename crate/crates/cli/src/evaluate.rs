use crate::report::{emit, CliResult, Failure, Format, RunReport};
use crate::LfunArgs;
use clap::{Args, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use slb_core::arithmetic::{build_tables, prime_coefficient_stats, StatsRow};
use slb_core::lfunc::{generate_zeros, l_logderiv, l_value, log_zeta_tracked, write_zeros, EvalConfig};
use slb_core::verify::Check;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Value,
    Logderiv,
    /// log ζ continued from σ = 2; ζ only.
    Log,
}

#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EvalArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub lfun: LfunArgs,
    /// Comma-separated σ values.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sigma: Vec<f64>,
    /// Comma-separated t values.
    #[arg(long, value_delimiter = ',', required = true)]
    pub t: Vec<f64>,
    #[arg(long, value_enum, default_value = "value")]
    pub quantity: Quantity,
    #[arg(long, default_value_t = 1e-10)]
    pub target_abs_error: f64,
    /// Also write `sigma,t,re,im,abs` rows here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct EvalRow {
    pub sigma: f64,
    pub t: f64,
    pub re: f64,
    pub im: f64,
    pub abs: f64,
}

fn write_csv<T: Serialize>(path: &PathBuf, rows: &[T]) -> CliResult<()> {
    let io = |e: csv::Error| Failure::Usage(format!("cannot write {}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    for r in rows {
        w.serialize(r).map_err(io)?;
    }
    w.flush().map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

pub fn eval_rows(args: &EvalArgs) -> CliResult<Vec<EvalRow>> {
    let desc = args.lfun.resolve()?;
    if args.quantity == Quantity::Log && !args.lfun.is_zeta() {
        return Err(Failure::Precondition("--quantity log is implemented for ζ only".into()));
    }
    let cfg = EvalConfig { target_abs_error: args.target_abs_error, ..Default::default() };
    let mut rows = Vec::with_capacity(args.sigma.len() * args.t.len());
    for &t in &args.t {
        for &sigma in &args.sigma {
            let s = Complex64::new(sigma, t);
            let v = match args.quantity {
                Quantity::Value => l_value(&desc, s, &cfg)?,
                Quantity::Logderiv => l_logderiv(&desc, s, &cfg)?,
                Quantity::Log => log_zeta_tracked(sigma, t, &cfg)?,
            };
            rows.push(EvalRow { sigma, t, re: v.re, im: v.im, abs: v.norm() });
        }
    }
    Ok(rows)
}

pub fn run_eval(args: EvalArgs) -> CliResult<()> {
    let started = Instant::now();
    let rows = eval_rows(&args)?;
    if let Some(p) = &args.csv {
        write_csv(p, &rows)?;
    }
    let mut report = RunReport::new("eval", &args, started);
    rows.iter().for_each(|r| report.push(r));
    let report = report.finish(true, started);
    emit(&report, args.format, |_| {
        println!("{:>10} {:>14} {:>22} {:>22} {:>18}", "sigma", "t", "re", "im", "abs");
        for r in &rows {
            println!("{:>10} {:>14} {:>22.15e} {:>22.15e} {:>18.12e}", r.sigma, r.t, r.re, r.im, r.abs);
        }
    });
    Ok(())
}

#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StatsArgs {
    #[arg(long, default_value = "product(zeta,dirichlet(5,2))")]
    pub lfun: String,
    /// Sieve limit.
    #[arg(long, default_value_t = 1e7)]
    pub limit: f64,
    /// Comma-separated x values; default is powers of ten up to the limit.
    #[arg(long, value_delimiter = ',')]
    pub grid: Vec<f64>,
    /// Expected limit of Σ|a(p)|/li(x), checked at the largest x.
    #[arg(long)]
    pub expect_mean: Option<f64>,
    #[arg(long, default_value_t = 0.01)]
    pub rel_tol: f64,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

pub fn stats_rows(args: &StatsArgs) -> CliResult<Vec<StatsRow>> {
    let desc = LfunArgs { lfun: args.lfun.clone(), descriptor: None }.resolve()?;
    if !(args.limit >= 10.0) {
        return Err(Failure::Usage(format!("--limit {} must be at least 10", args.limit)));
    }
    let tables = build_tables(&desc, args.limit as u64)?;
    let grid = if args.grid.is_empty() {
        let mut g: Vec<f64> = (3..).map(|k| 10f64.powi(k)).take_while(|&x| x < args.limit).collect();
        g.push(args.limit.floor());
        g
    } else {
        args.grid.clone()
    };
    Ok(prime_coefficient_stats(&tables, &grid)?)
}

pub fn run_stats(args: StatsArgs) -> CliResult<()> {
    let started = Instant::now();
    let rows = stats_rows(&args)?;
    if let Some(p) = &args.csv {
        write_csv(p, &rows)?;
    }
    let check = match (args.expect_mean, rows.last()) {
        (Some(want), Some(last)) => {
            let rel = (last.abs_over_li / want - 1.0).abs();
            Some(Check { label: format!("Σ|a(p)|/li(x) at x = {} vs {want}", last.x), value: rel, limit: args.rel_tol, pass: rel <= args.rel_tol })
        }
        _ => None,
    };
    let pass = check.as_ref().map_or(true, |c| c.pass);
    let mut report = RunReport::new("stats", &args, started);
    rows.iter().for_each(|r| report.push(r));
    if let Some(c) = &check {
        report.push(c);
    }
    let report = report.finish(pass, started);
    emit(&report, args.format, |_| {
        println!("{:>12} {:>16} {:>16} {:>12} {:>12} {:>10}", "x", "sum|a|", "sum|a|^2", "|a|/li", "|a|^2/li", "kappa");
        for r in &rows {
            println!(
                "{:>12} {:>16.1} {:>16.1} {:>12.6} {:>12.6} {:>10.6}",
                r.x, r.sum_abs, r.sum_sq, r.abs_over_li, r.sq_over_li, r.kappa
            );
        }
        if let Some(c) = &check {
            println!("{}: relative deviation {:.4e} (limit {})", c.label, c.value, c.limit);
        }
    });
    if pass {
        Ok(())
    } else {
        Err(Failure::Precondition("mean of |a(p)| outside tolerance".into()))
    }
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GenZerosArgs {
    #[arg(long, default_value_t = 100_000)]
    pub count: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GenZerosResult {
    count: usize,
    first: f64,
    last: f64,
    path: String,
}

pub fn run_gen_zeros(args: GenZerosArgs) -> CliResult<()> {
    let started = Instant::now();
    if args.count == 0 {
        return Err(Failure::Usage("--count must be positive".into()));
    }
    let z = generate_zeros(args.count)?;
    write_zeros(&args.out, &z).map_err(|e| Failure::Usage(e.to_string()))?;
    let res = GenZerosResult { count: z.len(), first: z[0], last: z[z.len() - 1], path: args.out.display().to_string() };
    let mut report = RunReport::new("gen-zeros", &args, started);
    report.push(&res);
    let report = report.finish(true, started);
    emit(&report, args.format, |_| println!("wrote {} ordinates up to {:.6} to {}", res.count, res.last, res.path));
    Ok(())
}
