//! Numerical checks of the explicit formulas: the Selberg moment formula and
//! the Guinand–Weil formula with the majorant `h_{a,Δ}`.

use crate::arithmetic::{build_tables, ArithmeticTables};
use crate::error::{Error, Result};
use crate::lfunc::{l_logderiv, EvalConfig, ZeroDataset};
use crate::quad::{tanh_sinh, GaussLegendre};
use crate::selberg::LFunctionDescriptor;
use crate::special::digamma;
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

/// Half-width of the ordinate window a dataset has to cover around `t`.
pub const DEFAULT_WINDOW: f64 = 100.0;

/// Distance below which a point counts as sitting on a singularity.
const SINGULAR_EPS: f64 = 1e-8;

const GL_POINTS: usize = 16;

/// `f_a(x) = a / (a² + x²)`.
pub fn f_a(a: f64, x: f64) -> f64 {
    a / (a * a + x * x)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MajorantSpec {
    pub a: f64,
    pub delta: f64,
}

impl MajorantSpec {
    pub fn new(a: f64, delta: f64) -> Result<Self> {
        if !(a > 0.0 && a <= 1.0) {
            return Err(Error::DomainViolation(format!("a = {a} must lie in (0, 1]")));
        }
        if !(delta > 0.0) {
            return Err(Error::DomainViolation(format!("Δ = {delta} must be positive")));
        }
        Ok(Self { a, delta })
    }

    /// `Δ = (1/π) log log τ`.
    pub fn from_log_log_tau(a: f64, log_log_tau: f64) -> Result<Self> {
        Self::new(a, log_log_tau / PI)
    }

    /// `(e^{2πaΔ} + e^{−2πaΔ}, (e^{πaΔ} − e^{−πaΔ})²)`.
    fn constants(&self) -> (f64, f64) {
        let x = PI * self.a * self.delta;
        (2.0 * (2.0 * x).cosh(), 4.0 * x.sinh().powi(2))
    }
}

/// `h_{a,Δ}(u)` on the real line.
pub fn majorant_h(spec: &MajorantSpec, u: f64) -> f64 {
    let (c, d) = spec.constants();
    f_a(spec.a, u) * (c - 2.0 * (2.0 * PI * spec.delta * u).cos()) / d
}

/// `h_{a,Δ}(z)` at a complex argument.
pub fn majorant_h_complex(spec: &MajorantSpec, z: Complex64) -> Complex64 {
    let (c, d) = spec.constants();
    let a = spec.a;
    a / (a * a + z * z) * (c - 2.0 * (2.0 * PI * spec.delta * z).cos()) / d
}

/// `ĥ(0) = π coth(πaΔ)`.
pub fn h_hat0(spec: &MajorantSpec) -> f64 {
    PI / (PI * spec.a * spec.delta).tanh()
}

/// `ĥ(ξ)` in closed form; it vanishes for `|ξ| ≥ Δ`.
pub fn h_hat(spec: &MajorantSpec, xi: f64) -> f64 {
    let (c, d) = spec.constants();
    let e = |x: f64| (-2.0 * PI * spec.a * x.abs()).exp();
    if xi.abs() >= spec.delta {
        return 0.0;
    }
    PI * (c * e(xi) - e(xi - spec.delta) - e(xi + spec.delta)) / d
}

/// `∫_U^∞ a cos(ωu)/(a² + u²) du`.
fn lorentz_cos_tail(a: f64, omega: f64, upper: f64) -> Result<f64> {
    let w = omega.abs();
    if w == 0.0 {
        return Ok(0.5 * PI - (upper / a).atan());
    }
    // rotate onto u = U + iv, where the integrand decays like e^{−ωv}
    let scale = 1.0 / w;
    let phase = Complex64::from_polar(1.0, w * upper);
    let f = |s: f64| {
        let v = scale * s / (1.0 - s);
        let dv = scale / ((1.0 - s) * (1.0 - s));
        let z = Complex64::new(upper, v);
        (Complex64::i() * phase * a * (-w * v).exp() / (a * a + z * z)).re * dv
    };
    tanh_sinh(f, 0.0, 1.0, 1e-13)
}

/// Panel boundaries on `[0, upper]`: geometric near the peak of width `a`,
/// then steps of at most `step`.
fn panels(a: f64, step: f64, upper: f64) -> Vec<f64> {
    let mut pts = vec![0.0];
    let mut x = a / 8.0;
    while x < step.min(upper) {
        pts.push(x);
        x *= 2.0;
    }
    let start = *pts.last().expect("nonempty");
    let n = ((upper - start) / step).ceil().max(1.0) as usize;
    let h = (upper - start) / n as f64;
    pts.extend((1..=n).map(|k| start + k as f64 * h));
    pts
}

fn integrate_panels(gl: &GaussLegendre, pts: &[f64], f: impl Fn(f64) -> f64) -> f64 {
    pts.windows(2).map(|w| gl.integrate(&f, w[0], w[1])).sum()
}

/// `ĥ(ξ) = ∫ h(u) e^{−2πiξu} du` by quadrature of the explicit `h`.
pub fn h_hat_quadrature(spec: &MajorantSpec, xi: f64) -> Result<f64> {
    let (c, d) = spec.constants();
    let a = spec.a;
    let freqs = [(c, 2.0 * PI * xi), (-1.0, 2.0 * PI * (xi - spec.delta)), (-1.0, 2.0 * PI * (xi + spec.delta))];
    let max_freq = freqs.iter().map(|f| f.1.abs()).fold(0.0, f64::max);
    let upper = 200.0;
    let step = (1.0 / (max_freq / (2.0 * PI) + 1.0)).min(0.5);
    let gl = GaussLegendre::new(GL_POINTS);
    let pts = panels(a, step, upper);
    let body = integrate_panels(&gl, &pts, |u| {
        f_a(a, u) * freqs.iter().map(|&(w, om)| w * (om * u).cos()).sum::<f64>()
    });
    let mut tail = 0.0;
    for &(w, om) in &freqs {
        tail += w * lorentz_cos_tail(a, om, upper)?;
    }
    Ok(2.0 * (body + tail) / d)
}

/// Truncated zero sum over the dataset and a heuristic tail beyond it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ZeroSum {
    pub truncated: f64,
    /// Twice the zero-density main-term estimate of the missing part.
    pub tail_estimate: f64,
}

/// `∫_T^∞ (log(u/2π)/2π) g(u) du` for `g ≥ 0` decaying like `u^{−2}`.
fn density_tail(height: f64, g: impl Fn(f64) -> f64) -> Result<f64> {
    let f = |w: f64| {
        let u = height / w;
        let v = (u / (2.0 * PI)).ln().max(0.0) / (2.0 * PI) * g(u) * height / (w * w);
        // the integrand vanishes as w → 0, where u overflows
        if v.is_finite() { v } else { 0.0 }
    };
    tanh_sinh(f, 0.0, 1.0, 1e-12)
}

/// `Σ_{±γ} f_a(t − γ)` over the dataset, with a tail estimate.
pub fn zero_sum(dataset: &ZeroDataset, a: f64, t: f64) -> Result<ZeroSum> {
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    if !(a > 0.0) {
        return Err(Error::DomainViolation(format!("a = {a} must be positive")));
    }
    let truncated = dataset.ordinates.iter().map(|&g| f_a(a, t - g) + f_a(a, t + g)).sum();
    let tail = density_tail(dataset.max_height, |u| f_a(a, t - u) + f_a(a, t + u))?;
    Ok(ZeroSum { truncated, tail_estimate: 2.0 * tail })
}

/// Pieces of the Selberg moment formula at `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SelbergReport {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
    pub prime_part: Complex64,
    pub pole_part: Complex64,
    pub trivial_part: Complex64,
    pub zero_part: Complex64,
}

fn check_dataset(dataset: &ZeroDataset, t: f64) -> Result<()> {
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let need = t.abs() + DEFAULT_WINDOW;
    if dataset.max_height < need {
        return Err(Error::DatasetTooShort { have: dataset.max_height, need });
    }
    Ok(())
}

/// Right-hand side of the Selberg moment formula with zeros from `dataset`,
/// compared with `(L'/L)(s)`.
pub fn selberg_rhs(
    desc: &LFunctionDescriptor,
    s: Complex64,
    x: f64,
    y: f64,
    dataset: &ZeroDataset,
) -> Result<SelbergReport> {
    if x < 2.0 {
        return Err(Error::XBelowTwo(x));
    }
    if y < 2.0 {
        return Err(Error::YBelowTwo(y));
    }
    if desc.pole_order > 0 && (s - 1.0).norm() < SINGULAR_EPS {
        return Err(Error::NearSingularity(format!("s = {s} is at the pole")));
    }
    check_dataset(dataset, s.im)?;
    let xy = x * y;
    let tables = build_tables(desc, xy.floor() as u64)?;
    selberg_rhs_with_tables(desc, s, x, y, dataset, &tables)
}

/// As [`selberg_rhs`], with precomputed tables covering `xy`.
pub fn selberg_rhs_with_tables(
    desc: &LFunctionDescriptor,
    s: Complex64,
    x: f64,
    y: f64,
    dataset: &ZeroDataset,
    tables: &ArithmeticTables,
) -> Result<SelbergReport> {
    let xy = x * y;
    let (lx, lxy, ly) = (x.ln(), xy.ln(), y.ln());
    if (tables.limit as f64) < xy.floor() {
        return Err(Error::OutOfTableRange { value: xy, lo: 1.0, hi: tables.limit as f64 });
    }
    let m = desc.pole_order as f64;

    let mut prime_part = Complex64::new(0.0, 0.0);
    for n in 2..=(xy.floor() as usize) {
        let lam = tables.lambda_l[n];
        if lam == Complex64::new(0.0, 0.0) {
            continue;
        }
        let nf = n as f64;
        let w = if nf <= x { 1.0 } else { (xy / nf).ln() / ly };
        prime_part -= lam * w * (-s * nf.ln()).exp();
    }

    let one_minus = Complex64::new(1.0, 0.0) - s;
    let pole_part = if m > 0.0 {
        m * ((one_minus * lxy).exp() - (one_minus * lx).exp()) / (one_minus * one_minus * ly)
    } else {
        Complex64::new(0.0, 0.0)
    };

    // Γ-factor poles at −q_j(k); the m_L poles of the completed function
    // at s = 0 cancel as many of them there.
    let term = |q: Complex64| {
        let w = q + s;
        ((-w * lx).exp() - (-w * lxy).exp()) / (w * w * ly)
    };
    let mut trivial_part = Complex64::new(0.0, 0.0);
    for g in &desc.gamma_factors {
        for k in 0u32.. {
            let q = (g.mu + k as f64) / g.lambda;
            if (q + s).norm() < SINGULAR_EPS {
                return Err(Error::NearSingularity(format!("s = {s} is a trivial zero")));
            }
            let v = term(q);
            trivial_part += v;
            if v.norm() < 1e-16 && q.re > 1.0 {
                break;
            }
        }
    }
    if m > 0.0 {
        trivial_part -= m * term(Complex64::new(0.0, 0.0));
    }

    let mut zero_part = Complex64::new(0.0, 0.0);
    for &g in &dataset.ordinates {
        for gamma in [g, -g] {
            let w = Complex64::new(0.5, gamma) - s;
            if w.norm() < SINGULAR_EPS {
                return Err(Error::NearSingularity(format!("s = {s} is a zero")));
            }
            zero_part += ((w * lx).exp() - (w * lxy).exp()) / (w * w * ly);
        }
    }

    let rhs = prime_part + pole_part + trivial_part + zero_part;
    let lhs = l_logderiv(desc, s, &EvalConfig::default())?;
    Ok(SelbergReport { lhs, rhs, residual: (lhs - rhs).norm(), prime_part, pole_part, trivial_part, zero_part })
}

/// Both sides of the Guinand–Weil formula for `u ↦ h_{a,Δ}(t − u)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GuinandWeilReport {
    /// `Σ_γ h(t − γ)` over the dataset.
    pub zero_sum: f64,
    /// Smooth-density estimate of the zeros above the dataset height.
    pub tail_estimate: f64,
    pub pole_term: f64,
    pub conductor_term: f64,
    pub prime_term: f64,
    pub gamma_term: f64,
    pub rhs: f64,
    pub residual: f64,
}

/// `Σ_j λ_j Re ψ(λ_j/2 + μ_j + iλ_j u)`.
fn gamma_density(desc: &LFunctionDescriptor, u: f64) -> f64 {
    desc.gamma_factors
        .iter()
        .map(|g| g.lambda * digamma(g.mu + Complex64::new(0.5 * g.lambda, g.lambda * u)).re)
        .sum()
}

/// `∫ h(v) G(t − v) dv` with `G` the Γ-factor density.
fn gamma_integral(desc: &LFunctionDescriptor, spec: &MajorantSpec, t: f64) -> Result<f64> {
    let (c, d) = spec.constants();
    let a = spec.a;
    let omega = 2.0 * PI * spec.delta;
    // past `upper` the density is smooth: `t ± v` stays away from 0
    let upper = (50.0 / spec.delta).clamp(200.0, 20_000.0).max(2.0 * t.abs() + 200.0);
    let step = (0.25 / spec.delta).min(0.5);
    let gl = GaussLegendre::new(GL_POINTS);
    let g2 = |v: f64| gamma_density(desc, t - v) + gamma_density(desc, t + v);
    let body = integrate_panels(&gl, &panels(a, step, upper), |v| majorant_h(spec, v) * g2(v));
    // beyond `upper`: the non-oscillating part exactly, the cos part by
    // integration by parts
    let smooth = tanh_sinh(
        |w: f64| {
            let v = upper / w;
            let r = f_a(a, v) * g2(v) * upper / (w * w);
            if r.is_finite() { r } else { 0.0 }
        },
        0.0,
        1.0,
        1e-12,
    )?;
    let g = |v: f64| f_a(a, v) * g2(v);
    let hstep = 1e-3 * upper;
    let g0 = g(upper);
    let g1 = (g(upper + hstep) - g(upper - hstep)) / (2.0 * hstep);
    let osc = -g0 * (omega * upper).sin() / omega - g1 * (omega * upper).cos() / (omega * omega);
    Ok(body + (c * smooth - 2.0 * osc) / d)
}

/// Residual of the Guinand–Weil formula at height `t`.
pub fn guinand_weil_residual(
    desc: &LFunctionDescriptor,
    spec: &MajorantSpec,
    t: f64,
    dataset: &ZeroDataset,
    tables: &ArithmeticTables,
) -> Result<GuinandWeilReport> {
    check_dataset(dataset, t)?;
    let n_max = (2.0 * PI * spec.delta).exp().floor();
    if n_max >= 2.0 && (tables.limit as f64) < n_max {
        return Err(Error::OutOfTableRange { value: n_max, lo: 2.0, hi: tables.limit as f64 });
    }
    let h = |u: f64| majorant_h(spec, u);
    let zero_sum: f64 = dataset.ordinates.iter().map(|&g| h(t - g) + h(t + g)).sum();
    let (c, d) = spec.constants();
    let tail = density_tail(dataset.max_height, |u| c / d * (f_a(spec.a, t - u) + f_a(spec.a, t + u)))?;

    let m = desc.pole_order as f64;
    let pole_term = 2.0 * m * majorant_h_complex(spec, Complex64::new(t, 0.5)).re;
    let conductor_term = desc.q_factor.ln() / PI * h_hat_quadrature(spec, 0.0)?;
    let mut prime_term = 0.0;
    for n in 2..=(n_max as usize) {
        let lam = tables.lambda_l[n];
        if lam == Complex64::new(0.0, 0.0) {
            continue;
        }
        let ln = (n as f64).ln();
        let hh = h_hat_quadrature(spec, ln / (2.0 * PI))?;
        prime_term -= (lam * Complex64::from_polar(1.0, -t * ln)).re * hh / ((n as f64).sqrt() * PI);
    }
    let gamma_term = gamma_integral(desc, spec, t)? / PI;
    let rhs = pole_term + conductor_term + prime_term + gamma_term;
    Ok(GuinandWeilReport {
        zero_sum,
        tail_estimate: tail,
        pole_term,
        conductor_term,
        prime_term,
        gamma_term,
        rhs,
        residual: (zero_sum - rhs).abs(),
    })
}
