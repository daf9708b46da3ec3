//! Parameter optimization: `α₀`, the `(ν₁, ν₂)` pairs and per-point
//! minimization of the explicit bounds.

use crate::bounds::{bound_main, BoundParameters, Target};
use crate::error::{Error, Result};
use crate::kernel::integral_theta1;
use crate::numeric::{bisect, golden_section};
use crate::selberg::{EvaluationPoint, LFunctionDescriptor};
use serde::{Deserialize, Serialize};
use std::f64::consts::E;

/// Iterations per one-dimensional golden-section solve.
pub const GOLDEN_ITERATIONS: usize = 60;

/// Coordinate sweeps in [`optimize_nu`] and [`minimize_bound`].
pub const SWEEPS: usize = 3;

const SCAN_POINTS: usize = 32;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OptimizationReport {
    pub variable_names: Vec<String>,
    pub optimum: Vec<f64>,
    pub objective_value: f64,
    pub method: String,
    pub iterations: usize,
    /// Search interval per variable.
    pub bracket: Vec<(f64, f64)>,
}

/// `(1 − α)e^α + 1`.
pub fn alpha0_equation(alpha: f64) -> f64 {
    (1.0 - alpha) * alpha.exp() + 1.0
}

/// The root `α₀ ≈ 1.27846` of `(1 − α)e^α + 1 = 0` in `[1, 2]`.
pub fn solve_alpha0() -> f64 {
    bisect(alpha0_equation, 1.0, 2.0, 1e-14).expect("sign change on [1, 2]")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NuVariant {
    Cor9,
    Cor10,
}

impl NuVariant {
    /// Upper bound on `η` over the corollary's range.
    pub fn eta_bound(self) -> f64 {
        match self {
            NuVariant::Cor9 => 1.4,
            NuVariant::Cor10 => 1.0,
        }
    }
}

/// `c²ν₂²e² + 1/(ν₁²(1 − 1/ν₂)²) + ∫₀^{ν₁} θ₁` with `c` the `η` bound.
pub fn nu_objective(variant: NuVariant, nu1: f64, nu2: f64) -> Result<f64> {
    if !(nu1 > 0.0) || !(nu2 > 1.0) {
        return Err(Error::DomainViolation(format!("ν = ({nu1}, {nu2}) needs ν₁ > 0 and ν₂ > 1")));
    }
    let c = variant.eta_bound();
    let q = nu1 * (1.0 - 1.0 / nu2);
    Ok((c * nu2 * E).powi(2) + 1.0 / (q * q) + integral_theta1(nu1)?)
}

pub const NU1_BOX: (f64, f64) = (0.5, 10.0);
/// `ν₂ ∈ (1, 2)`, kept a little inside the open end.
pub const NU2_BOX: (f64, f64) = (1.0 + 1e-6, 2.0);

/// Coordinate descent with golden-section line searches over the ν box.
pub fn optimize_nu(variant: NuVariant) -> OptimizationReport {
    let f = |v: &[f64]| nu_objective(variant, v[0], v[1]).unwrap_or(f64::INFINITY);
    let mut x = vec![1.0, 1.5];
    let boxes = [NU1_BOX, NU2_BOX];
    let mut iterations = 0;
    for _ in 0..SWEEPS * 4 {
        for k in 0..2 {
            let m = golden_section(
                |v| {
                    let mut y = x.clone();
                    y[k] = v;
                    f(&y)
                },
                boxes[k].0,
                boxes[k].1,
                GOLDEN_ITERATIONS,
            );
            x[k] = m.x;
            iterations += m.iterations;
        }
    }
    OptimizationReport {
        variable_names: vec!["nu1".into(), "nu2".into()],
        objective_value: f(&x),
        optimum: x,
        method: "coordinate descent, golden section".into(),
        iterations,
        bracket: boxes.to_vec(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FreeVar {
    Alpha,
    Alpha1,
    Nu1,
    Nu2,
}

impl FreeVar {
    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.trim().to_ascii_lowercase()))
            .map_err(|_| Error::ParseError(format!("unknown variable `{s}`")))
    }

    pub fn name(self) -> &'static str {
        match self {
            FreeVar::Alpha => "alpha",
            FreeVar::Alpha1 => "alpha1",
            FreeVar::Nu1 => "nu1",
            FreeVar::Nu2 => "nu2",
        }
    }

    fn get(self, p: &BoundParameters) -> f64 {
        match self {
            FreeVar::Alpha => p.alpha,
            FreeVar::Alpha1 => p.alpha1,
            FreeVar::Nu1 => p.nu1,
            FreeVar::Nu2 => p.nu2,
        }
    }

    fn set(self, p: &mut BoundParameters, v: f64) {
        match self {
            FreeVar::Alpha => p.alpha = v,
            FreeVar::Alpha1 => p.alpha1 = v,
            FreeVar::Nu1 => p.nu1 = v,
            FreeVar::Nu2 => p.nu2 = v,
        }
    }
}

/// Certified value of `bound_main` for `target`, or `None` when the
/// parameters fail a precondition.
pub fn certified_value(
    desc: &LFunctionDescriptor,
    point: &EvaluationPoint,
    params: &BoundParameters,
    target: Target,
) -> Option<f64> {
    let (ld, ll) = bound_main(desc, point, params).ok()?;
    let r = match target {
        Target::LogDeriv => ld,
        Target::LogL => ll,
    };
    (r.certified && r.value.is_finite()).then_some(r.value)
}

/// Minimizes the certified bound over a box in the free variables.
///
/// Each coordinate step scans the interval on a grid and polishes the best
/// feasible grid point by golden section between its neighbours; infeasible
/// parameter sets count as `+∞`.
pub fn minimize_bound(
    desc: &LFunctionDescriptor,
    point: &EvaluationPoint,
    free: &[(FreeVar, f64, f64)],
    base: &BoundParameters,
    target: Target,
) -> Result<OptimizationReport> {
    if free.iter().any(|&(_, lo, hi)| !(lo <= hi)) {
        return Err(Error::EmptyFeasibleSet);
    }
    let f = |p: &BoundParameters| certified_value(desc, point, p, target).unwrap_or(f64::INFINITY);
    let mut params = base.clone();
    for &(v, lo, hi) in free {
        v.set(&mut params, v.get(base).clamp(lo, hi));
    }
    let mut best = f(&params);
    let mut iterations = 0;
    for _ in 0..SWEEPS {
        for &(v, lo, hi) in free {
            let eval = |x: f64| {
                let mut p = params.clone();
                v.set(&mut p, x);
                f(&p)
            };
            if lo == hi {
                continue;
            }
            let grid: Vec<f64> = (0..=SCAN_POINTS).map(|k| lo + (hi - lo) * k as f64 / SCAN_POINTS as f64).collect();
            let vals: Vec<f64> = grid.iter().map(|&x| eval(x)).collect();
            iterations += grid.len();
            let (k, &vk) = vals.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).expect("nonempty grid");
            if !vk.is_finite() {
                continue;
            }
            let (a, b) = (grid[k.saturating_sub(1)], grid[(k + 1).min(SCAN_POINTS)]);
            let m = golden_section(eval, a, b, GOLDEN_ITERATIONS);
            iterations += m.iterations;
            let (x, fx) = if m.value <= vk { (m.x, m.value) } else { (grid[k], vk) };
            if fx <= best {
                v.set(&mut params, x);
                best = fx;
            }
        }
    }
    if !best.is_finite() {
        return Err(Error::EmptyFeasibleSet);
    }
    Ok(OptimizationReport {
        variable_names: free.iter().map(|f| f.0.name().to_string()).collect(),
        optimum: free.iter().map(|f| f.0.get(&params)).collect(),
        objective_value: best,
        method: "coordinate scan, golden section".into(),
        iterations,
        bracket: free.iter().map(|f| (f.1, f.2)).collect(),
    })
}
