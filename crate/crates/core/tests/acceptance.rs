//! End-to-end acceptance run: one line per criterion, non-zero exit on any failure.

use slb_core::arithmetic::{build_tables, prime_coefficient_stats};
use slb_core::bounds::{dedekind_residue_bound, COR10_LOG_LOG_TAU0};
use slb_core::explicit::zero_sum;
use slb_core::kernel::{frak_a, frak_b, trigamma_quarter_bound};
use slb_core::lfunc::{load_zeros, EvalConfig, ZeroDataset, ZEROS_ENV};
use slb_core::opt::{optimize_nu, solve_alpha0, NuVariant};
use slb_core::selberg::{builtin, Builtin};
use slb_core::verify::{
    cor9_samples, reciprocal_zero_sum, selberg_grid, suite_cor9_empirical, suite_dominance, suite_majorant,
    suite_prime_sums, suite_selberg_identity, SuiteReport, MAJORANT_PAIRS,
};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn from_suite(r: slb_core::Result<SuiteReport>) -> Outcome {
    match r {
        Ok(s) => {
            let failed: Vec<&str> = s.checks.iter().filter(|c| !c.pass).map(|c| c.label.as_str()).collect();
            let detail = if failed.is_empty() {
                format!("{} checks", s.checks.len())
            } else {
                format!("{} of {} checks failed, first: {}", failed.len(), s.checks.len(), failed[0])
            };
            outcome(s.pass, detail)
        }
        Err(e) => outcome(false, format!("error: {e}")),
    }
}

fn zeros() -> Result<ZeroDataset, String> {
    let path = std::env::var(ZEROS_ENV)
        .ok()
        .filter(|p| !p.is_empty())
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/zeros1e5.txt"));
    load_zeros(&path).map_err(|e| format!("zeros file {}: {e}", path.display()))
}

fn c1() -> Outcome {
    let a = solve_alpha0();
    outcome((a - 1.2785).abs() <= 5e-4 && format!("{a:.3}") == "1.278", format!("α₀ = {a:.6}"))
}

fn c2() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (v, want) in [(NuVariant::Cor9, (3.378, 1.182)), (NuVariant::Cor10, (3.049, 1.244))] {
        let r = optimize_nu(v);
        ok &= (r.optimum[0] - want.0).abs() <= 1e-2 && (r.optimum[1] - want.1).abs() <= 1e-2;
        parts.push(format!("({:.4}, {:.4})", r.optimum[0], r.optimum[1]));
    }
    outcome(ok, format!("ν = {}", parts.join(", ")))
}

fn c3() -> Outcome {
    let a: f64 = 1.278;
    let lead = (a.exp() + 1.0) / (2.0 * a);
    let tg = trigamma_quarter_bound();
    let fa = frak_a(1.0, 1.3, 2001.0);
    let fb = frak_b(1.0, 1.0, 1.0, 1.3, 2001.0, COR10_LOG_LOG_TAU0.exp());
    match (fa, fb) {
        (Ok(fa), Ok(fb)) => outcome(
            lead <= 1.796 && (lead - 1.7956).abs() < 5e-5 && tg <= 4.3 && (tg - 4.2993).abs() < 5e-5 && fa <= 1.1 && fb < 0.0,
            format!("lead = {lead:.5}, ¼ψ′(¼) = {tg:.5}, 𝔞 = {fa:.5}, 𝔟 = {fb:.4}"),
        ),
        (fa, fb) => outcome(false, format!("error: {fa:?} {fb:?}")),
    }
}

fn c4(ds: &Result<ZeroDataset, String>) -> (Outcome, Duration) {
    let ds = match ds {
        Ok(d) => d,
        Err(e) => return (outcome(false, e.clone()), Duration::ZERO),
    };
    let start = Instant::now();
    let r = zero_sum(ds, 0.5, 0.0);
    let el = start.elapsed();
    let o = match r {
        Ok(z) => {
            let exact = reciprocal_zero_sum();
            outcome(
                ds.len() >= 100_000 && (z.truncated - 0.023_095_7).abs() <= 1e-4 && (exact - 0.023_095_7).abs() < 1e-7,
                format!("{} zeros to height {:.0}: sum = {:.7}, tail ≈ {:.2e}", ds.len(), ds.max_height, z.truncated, exact - z.truncated),
            )
        }
        Err(e) => outcome(false, format!("error: {e}")),
    };
    (o, el)
}

fn c5(ds: &Result<ZeroDataset, String>) -> Outcome {
    match ds {
        Ok(d) => from_suite(suite_selberg_identity(d, &selberg_grid(), 1e-3)),
        Err(e) => outcome(false, e.clone()),
    }
}

fn c10() -> Outcome {
    let desc = match builtin(&Builtin::parse("product(zeta,dirichlet(5,2))").expect("builtin name")) {
        Ok(d) => d,
        Err(e) => return outcome(false, format!("error: {e}")),
    };
    let rows = build_tables(&desc, 10_000_000).and_then(|t| prime_coefficient_stats(&t, &[1e7]));
    match rows {
        Ok(rows) => {
            let want = (1.0 + std::f64::consts::SQRT_2) / 2.0;
            let got = rows[0].abs_over_li;
            outcome((got / want - 1.0).abs() <= 0.01, format!("Σ|a(p)|/li(10⁷) = {got:.5} vs {want:.5}"))
        }
        Err(e) => outcome(false, format!("error: {e}")),
    }
}

fn c11() -> Outcome {
    match dedekind_residue_bound(2, 5.4e6) {
        Ok(v) => {
            let rejects = dedekind_residue_bound(2, 5.39e6).is_err() && dedekind_residue_bound(3, 1e6).is_err();
            outcome((v - 24.10).abs() <= 0.05 && rejects, format!("bound = {v:.4}, rejects |Δ| < 5.4·10⁶: {rejects}"))
        }
        Err(e) => outcome(false, format!("error: {e}")),
    }
}

fn main() -> ExitCode {
    let ds = zeros();
    let cfg = EvalConfig::default();
    let mut all = true;
    let mut report = |n: u32, name: &str, limit: Duration, run: &mut dyn FnMut() -> (Outcome, Duration)| {
        let (o, took) = run();
        let in_time = took <= limit;
        let pass = o.pass && in_time;
        all &= pass;
        let time_note = if in_time { String::new() } else { format!(" [over the {limit:?} budget]") };
        println!(
            "criterion {n:>2} {}: {name}: {} ({:.3} s){time_note}",
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            took.as_secs_f64()
        );
    };
    let timed = |f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let o = f();
        (o, start.elapsed())
    };
    const MS: Duration = Duration::from_millis(1);
    const S: Duration = Duration::from_secs(1);
    report(1, "α₀ reproduction", MS, &mut || timed(&c1));
    report(2, "ν-optimization reproduction", S, &mut || timed(&c2));
    report(3, "constant checks", S, &mut || timed(&c3));
    report(4, "zero-sum identity", S, &mut || c4(&ds));
    report(5, "Selberg moment identity", 60 * S, &mut || timed(&|| c5(&ds)));
    report(6, "ζ corollary soundness", 600 * S, &mut || {
        timed(&|| from_suite(suite_cor9_empirical(&cor9_samples(10), &cfg)))
    });
    report(7, "dominance of the family corollary", 5 * S, &mut || timed(&|| from_suite(suite_dominance(20))));
    report(8, "exact prime sums against the lemmas", 60 * S, &mut || timed(&|| from_suite(suite_prime_sums(100))));
    report(9, "majorant suite", 5 * S, &mut || timed(&|| from_suite(suite_majorant(&MAJORANT_PAIRS, 10_000))));
    report(10, "prime coefficient statistics", 30 * S, &mut || timed(&c10));
    report(11, "Dedekind residue bound", MS, &mut || timed(&c11));
    if all {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
