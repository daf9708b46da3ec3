//! Property suites comparing the bounds and identities against direct
//! computation.

use crate::arithmetic::{build_tables, s_exact, s_hat_and_ex_exact, select_xy};
use crate::bounds::{bound_case, bound_line1, family_cor10, prime_term_bound, zeta_cor9, BoundParameters, CaseTag, PrimeTerm};
use crate::consts::EULER_GAMMA;
use crate::error::{Error, Result};
use crate::explicit::{f_a, guinand_weil_residual, h_hat0, h_hat_quadrature, majorant_h, selberg_rhs, zero_sum, MajorantSpec};
use crate::lfunc::{log_zeta_tracked, zeta_logderiv, EvalConfig, ZeroDataset};
use crate::selberg::{zeta, EvaluationPoint};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{LN_2, PI};

const SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub value: f64,
    pub limit: f64,
    pub pass: bool,
}

impl Check {
    /// `value ≤ limit`.
    pub fn le(label: impl Into<String>, value: f64, limit: f64) -> Self {
        Self { label: label.into(), value, limit, pass: value <= limit }
    }

    /// `|value − target| ≤ tol`, reported as the deviation against `tol`.
    pub fn near(label: impl Into<String>, value: f64, target: f64, tol: f64) -> Self {
        Self { label: format!("{} = {value} ≈ {target}", label.into()), value: (value - target).abs(), limit: tol, pass: (value - target).abs() <= tol }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        let pass = !checks.is_empty() && checks.iter().all(|c| c.pass);
        Self { suite: suite.name().to_string(), checks, pass }
    }

    /// Largest `value` among the checks.
    pub fn max_value(&self) -> f64 {
        self.checks.iter().map(|c| c.value).fold(f64::NEG_INFINITY, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    SelbergIdentity,
    ZeroSum,
    Cor9Empirical,
    Dominance,
    Majorant,
    GwResidual,
    PrimeSums,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::SelbergIdentity,
        Suite::ZeroSum,
        Suite::Cor9Empirical,
        Suite::Dominance,
        Suite::Majorant,
        Suite::GwResidual,
        Suite::PrimeSums,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SelbergIdentity => "selberg-identity",
            Suite::ZeroSum => "zero-sum",
            Suite::Cor9Empirical => "cor9-empirical",
            Suite::Dominance => "dominance",
            Suite::Majorant => "majorant",
            Suite::GwResidual => "gw-residual",
            Suite::PrimeSums => "prime-sums",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::ParseError(format!("unknown suite `{s}`")))
    }

    pub fn needs_zeros(self) -> bool {
        matches!(self, Suite::SelbergIdentity | Suite::ZeroSum | Suite::GwResidual)
    }
}

/// `Σ_ρ Re 1/ρ = 1 + γ/2 − ½ log 4π`.
pub fn reciprocal_zero_sum() -> f64 {
    1.0 + EULER_GAMMA / 2.0 - 0.5 * (4.0 * PI).ln()
}

/// Zero-sum identity for `f_{1/2}` at `t = 0`.
pub fn suite_zero_sum(ds: &ZeroDataset) -> Result<SuiteReport> {
    let z = zero_sum(ds, 0.5, 0.0)?;
    let mut checks = vec![Check::near("truncated + tail", z.truncated + z.tail_estimate / 2.0, reciprocal_zero_sum(), 1e-4)];
    if ds.len() >= 100_000 {
        checks.push(Check::near("truncated", z.truncated, 0.023_095, 2.5e-5));
    }
    checks.push(Check::le("truncated ≤ identity value", z.truncated, reciprocal_zero_sum()));
    Ok(SuiteReport::new(Suite::ZeroSum, checks))
}

/// Grid of `s` for the moment-formula check.
pub fn selberg_grid() -> Vec<Complex64> {
    [
        (1.2, 100.0),
        (1.5, 1000.0),
        (2.0, 5000.0),
        (1.3, -3000.0),
        (1.7, 20000.0),
        (1.2, 50000.0),
        (1.9, 7000.0),
        (1.4, -12000.0),
        (1.6, 345.6),
        (1.25, 33333.3),
    ]
    .into_iter()
    .map(|(s, t)| Complex64::new(s, t))
    .collect()
}

/// Selberg moment formula with `x = y = 10`: residuals at each grid point,
/// and halving of the residual with doubled zero heights where the data allows.
pub fn suite_selberg_identity(ds: &ZeroDataset, grid: &[Complex64], tol: f64) -> Result<SuiteReport> {
    let top = ds.max_height.min(7.0e4);
    let full = ds.up_to(top)?;
    let mut checks = Vec::new();
    let rows: Vec<Result<Check>> = grid
        .par_iter()
        .map(|&s| Ok(Check::le(format!("residual at s = {s}"), selberg_rhs(&zeta(), s, 10.0, 10.0, &full)?.residual, tol)))
        .collect();
    for r in rows {
        checks.push(r?);
    }
    let heights = [top / 4.0, top / 2.0, top];
    for &s in grid {
        if s.im.abs() + 100.0 > heights[0] {
            continue;
        }
        let res: Vec<f64> = heights
            .iter()
            .map(|&h| Ok(selberg_rhs(&zeta(), s, 10.0, 10.0, &ds.up_to(h)?)?.residual))
            .collect::<Result<_>>()?;
        for w in res.windows(2) {
            checks.push(Check::le(format!("residual ratio on doubling at s = {s}"), w[1] / w[0], 0.5));
        }
    }
    Ok(SuiteReport::new(Suite::SelbergIdentity, checks))
}

/// Sample points for the ζ corollary check.
pub fn cor9_samples(per_height: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for t in [1e6, 2e6, 1e7] {
        let lo = 0.5 + 1.0 / f64::ln(f64::ln(t));
        for k in 0..per_height {
            let f = if per_height == 1 { 0.5 } else { k as f64 / (per_height - 1) as f64 };
            out.push((lo + (0.999 - lo) * f, t));
        }
    }
    out
}

/// `|ζ'/ζ|` and `|log ζ|` against the ζ corollary at the sample points.
pub fn suite_cor9_empirical(samples: &[(f64, f64)], cfg: &EvalConfig) -> Result<SuiteReport> {
    let rows: Vec<Result<[Check; 2]>> = samples
        .par_iter()
        .map(|&(sigma, t)| {
            let (bd, bl) = zeta_cor9(sigma, t)?;
            let ld = zeta_logderiv(Complex64::new(sigma, t), cfg)?.norm();
            let lg = log_zeta_tracked(sigma, t, cfg)?.norm();
            Ok([
                Check::le(format!("|ζ'/ζ({sigma:.4} + {t:e}i)|"), ld, bd.value),
                Check::le(format!("|log ζ({sigma:.4} + {t:e}i)|"), lg, bl.value),
            ])
        })
        .collect();
    let mut checks = Vec::new();
    for r in rows {
        checks.extend(r?);
    }
    Ok(SuiteReport::new(Suite::Cor9Empirical, checks))
}

/// Parameters of the family corollary in the strip.
pub fn cor10_parameters() -> BoundParameters {
    BoundParameters {
        alpha: 1.278,
        alpha1: 1.3,
        nu1: 3.049,
        nu2: 1.244,
        log_log_tau0: Some(13.0),
        t0: Some(2001.0),
        ..Default::default()
    }
}

/// Case 1 against the simplified strip bounds on an `n × n` grid, and the
/// 1-line bounds against their simplified forms on `σ = 1`.
pub fn suite_dominance(n: usize) -> Result<SuiteReport> {
    let z = zeta();
    let p = cor10_parameters();
    let mut checks = Vec::new();
    let (mut worst_d, mut worst_l) = (Check::le("", f64::NEG_INFINITY, 1.0), Check::le("", f64::NEG_INFINITY, 1.0));
    for i in 0..n {
        let sigma = 0.6 + (0.999 - 0.6) * i as f64 / (n - 1).max(1) as f64;
        for j in 0..n {
            let ll = 13.0 + j as f64 / (n - 1).max(1) as f64;
            let pt = EvaluationPoint::from_log_log_tau(sigma, ll)?;
            let (ld, lg) = bound_case(&z, &pt, &p, CaseTag::Case1)?;
            let c = family_cor10(&z, &pt)?;
            let rd = ld.value / c.log_deriv.value;
            let rl = lg.value / c.log_l.value;
            if rd > worst_d.value {
                worst_d = Check::le(format!("worst logDeriv ratio case 1 / simplified (σ = {sigma:.3}, loglogτ = {ll:.3})"), rd, 1.0);
            }
            if rl > worst_l.value {
                worst_l = Check::le(format!("worst logL ratio case 1 / simplified (σ = {sigma:.3}, loglogτ = {ll:.3})"), rl, 1.0);
            }
            checks.push(Check::le(format!("case 1 certified at σ = {sigma:.3}, loglogτ = {ll:.3}"), f64::from(!(ld.certified && lg.certified)), 0.0));
        }
    }
    checks.push(worst_d);
    checks.push(worst_l);
    for j in 0..n {
        let ll = 13.0 + j as f64 / (n - 1).max(1) as f64;
        let pt = EvaluationPoint::from_log_log_tau(1.0, ll)?;
        let c = family_cor10(&z, &pt)?;
        let pd = BoundParameters { alpha: 2.186, ..p.clone() };
        let (ld, _) = bound_line1(&z, &pt, &pd)?;
        let (_, lg) = bound_line1(&z, &pt, &p)?;
        checks.push(Check::le(format!("1-line logDeriv at loglogτ = {ll:.3}"), ld.value, c.log_deriv_line1.value));
        checks.push(Check::le(format!("1-line logL at loglogτ = {ll:.3}"), lg.value, c.log_l_line1.value));
    }
    Ok(SuiteReport::new(Suite::Dominance, checks))
}

pub const MAJORANT_PAIRS: [(f64, f64); 10] = [
    (0.25, 2.0),
    (0.5, 1.0),
    (0.05, 0.5),
    (1.0, 0.3),
    (0.1, 1.5),
    (0.75, 0.9),
    (0.3, 3.0),
    (0.01, 1.0),
    (0.9, 2.5),
    (0.2, 0.1),
];

/// `h ≥ f_a` at random points and the quadrature value of `ĥ(0)`.
pub fn suite_majorant(pairs: &[(f64, f64)], samples: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = Vec::new();
    for &(a, delta) in pairs {
        let spec = MajorantSpec::new(a, delta)?;
        let mut worst = f64::NEG_INFINITY;
        for _ in 0..samples {
            let u: f64 = rng.gen_range(-100.0..=100.0);
            let f = f_a(a, u);
            worst = worst.max((f - majorant_h(&spec, u)) / f);
        }
        checks.push(Check::le(format!("max (f_a − h)/f_a for (a, Δ) = ({a}, {delta})"), worst, 1e-12));
        checks.push(Check::near(
            format!("ĥ(0) quadrature for ({a}, {delta})"),
            h_hat_quadrature(&spec, 0.0)?,
            h_hat0(&spec),
            1e-8,
        ));
    }
    Ok(SuiteReport::new(Suite::Majorant, checks))
}

/// Guinand–Weil residuals for ζ.
pub fn suite_gw_residual(ds: &ZeroDataset, tol: f64) -> Result<SuiteReport> {
    let ds = ds.up_to(ds.max_height.min(7.0e4))?;
    let z = zeta();
    let tables = build_tables(&z, 2_000)?;
    let mut checks = Vec::new();
    for (a, delta, t) in [(0.25, 1.0, 100.0), (0.5, 0.8, 1000.0), (0.1, 1.2, 5000.0), (0.75, 0.5, 20000.0), (0.05, 1.0, 60000.0)]
    {
        let spec = MajorantSpec::new(a, delta)?;
        let r = guinand_weil_residual(&z, &spec, t, &ds, &tables)?;
        checks.push(Check::le(format!("residual at (a, Δ, t) = ({a}, {delta}, {t})"), r.residual, tol));
        checks.push(Check::le(
            format!("residual with density tail at (a, Δ, t) = ({a}, {delta}, {t})"),
            (r.zero_sum + r.tail_estimate - r.rhs).abs(),
            1e-6,
        ));
    }
    Ok(SuiteReport::new(Suite::GwResidual, checks))
}

/// Exact prime sums for ζ against their bounds at `count` random admissible
/// `(σ, α, log τ)` with `log τ ∈ [60, 1000]`.
pub fn suite_prime_sums(count: usize) -> Result<SuiteReport> {
    let z = zeta();
    let tables = build_tables(&z, 1_000_000)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut checks = Vec::new();
    let mut found = 0;
    let mut tries = 0;
    while found < count {
        tries += 1;
        if tries > 100 * count {
            return Err(Error::QuadratureFailure("too few admissible prime-sum samples".into()));
        }
        let log_tau: f64 = rng.gen_range(60.0..=1000.0);
        let ll = log_tau.ln();
        let alpha: f64 = rng.gen_range(LN_2..=2.0);
        let alpha1 = 0.6 * alpha;
        let lo = 0.5 + alpha1 / ll;
        if lo >= 0.999 {
            continue;
        }
        let sigma: f64 = rng.gen_range(lo..0.999);
        let Ok((x, y)) = select_xy(sigma, alpha, log_tau) else { continue };
        let params = BoundParameters { alpha, alpha1, ..Default::default() };
        let Ok(s_bound) = prime_term_bound(&z, sigma, log_tau, &params, PrimeTerm::SCase1or2) else { continue };
        let shat_bound = prime_term_bound(&z, sigma, log_tau, &params, PrimeTerm::ShatCase1)?;
        let ex_bound = prime_term_bound(&z, sigma, log_tau, &params, PrimeTerm::Ex)?;
        let exact = s_hat_and_ex_exact(&tables, sigma, x, y, tables.limit as f64)?;
        let tag = format!("σ = {sigma:.4}, α = {alpha:.3}, log τ = {log_tau:.1}");
        checks.push(Check::le(format!("S at {tag}"), s_exact(&tables, sigma, x, y)?, s_bound));
        checks.push(Check::le(format!("Ŝ at {tag}"), exact.s_hat, shat_bound));
        checks.push(Check::le(format!("E_x at {tag}"), exact.ex_upper, ex_bound));
        found += 1;
    }
    Ok(SuiteReport::new(Suite::PrimeSums, checks))
}
