//! Euler–Maclaurin evaluation of `ζ(s)` and `L(s, χ)` together with their
//! `s`-derivatives.

use super::EvalConfig;
use crate::character::DirichletCharacter;
use crate::error::{Error, Result};
use crate::selberg::LFunctionDescriptor;
use crate::special::{bernoulli_over_factorial, exprel};
use num_complex::Complex64;

/// `(e^w(w − 1) + 1)/w²`, the derivative of `exprel`.
fn exprel_prime(w: Complex64) -> Complex64 {
    if w.norm() < 1e-2 {
        // Σ_{k≥1} k w^{k−1}/(k+1)!
        let mut sum = Complex64::new(0.0, 0.0);
        let mut pow = Complex64::new(1.0, 0.0);
        let mut fact = 2.0;
        for k in 1..12 {
            sum += pow * (k as f64 / fact);
            pow *= w;
            fact *= (k + 2) as f64;
        }
        sum
    } else {
        (w.exp() * (w - 1.0) + 1.0) / (w * w)
    }
}

/// `Σ_a w_a ζ(s, a/q)` for a set of weighted residues, scaled by `q^{-s}`.
#[derive(Debug, Clone)]
pub(crate) struct Series {
    /// `(a/q, w_a)` with `a/q ∈ (0, 1]`.
    residues: Vec<(f64, Complex64)>,
    log_q: f64,
    weight_sum: Complex64,
}

impl Series {
    pub fn zeta() -> Self {
        Self { residues: vec![(1.0, Complex64::new(1.0, 0.0))], log_q: 0.0, weight_sum: Complex64::new(1.0, 0.0) }
    }

    pub fn character(chi: &DirichletCharacter) -> Self {
        if chi.modulus == 1 {
            return Self::zeta();
        }
        let q = chi.modulus;
        let residues: Vec<_> = (1..=q)
            .map(|a| (a as f64 / q as f64, chi.value(a)))
            .filter(|(_, w)| w.norm() > 0.0)
            .collect();
        let weight_sum = residues.iter().map(|r| r.1).sum::<Complex64>();
        // exact cancellation for nonprincipal characters
        let weight_sum = if weight_sum.norm() < 1e-9 { Complex64::new(0.0, 0.0) } else { weight_sum };
        Self { residues, log_q: (q as f64).ln(), weight_sum }
    }

    fn has_pole(&self) -> bool {
        self.weight_sum.norm() > 0.0
    }

    /// Values and derivatives at `σ₀ + kδ + it`, `k < count`, with `n_terms`
    /// direct terms per residue. Returns the largest remainder estimate.
    fn grid_fixed(
        &self,
        sigma0: f64,
        delta: f64,
        count: usize,
        t: f64,
        n_terms: u64,
        depth: usize,
    ) -> (Vec<(Complex64, Complex64)>, f64) {
        let mut f = vec![Complex64::new(0.0, 0.0); count];
        let mut fd = vec![Complex64::new(0.0, 0.0); count];
        for &(a, w) in &self.residues {
            for n in 0..n_terms {
                let x = n as f64 + a;
                let lx = x.ln();
                let (sin, cos) = (-t * lx).sin_cos();
                let base = w * Complex64::new(cos, sin);
                let mut r = (-sigma0 * lx).exp();
                let step = if count > 1 { (-delta * lx).exp() } else { 1.0 };
                for k in 0..count {
                    let v = base * r;
                    f[k] += v;
                    fd[k] -= v * lx;
                    r *= step;
                }
            }
        }
        let bf = bernoulli_over_factorial();
        let abs_w: f64 = self.residues.iter().map(|r| r.1.norm()).sum();
        let mut worst: f64 = 0.0;
        let mut out = Vec::with_capacity(count);
        for k in 0..count {
            let sigma = sigma0 + k as f64 * delta;
            let s = Complex64::new(sigma, t);
            let (mut v, mut d) = (f[k], fd[k]);
            for &(a, w) in &self.residues {
                let x = n_terms as f64 + a;
                let lx = x.ln();
                let xs = (-s * lx).exp();
                // ∫_N^∞ (x + a)^{-s} with the pole part split off
                let z = (1.0 - s) * lx;
                v -= w * lx * exprel(z);
                d += w * lx * lx * exprel_prime(z);
                v += w * xs * 0.5;
                d -= w * xs * lx * 0.5;
                let mut poch = s;
                let mut poch_d = Complex64::new(1.0, 0.0);
                let mut xp = xs / x;
                for j in 1..=depth {
                    let c = bf[j - 1];
                    v += w * c * poch * xp;
                    d += w * c * (poch_d - poch * lx) * xp;
                    // advance the Pochhammer symbol by two factors
                    for add in [2 * j - 1, 2 * j] {
                        let f = s + add as f64;
                        poch_d = poch_d * f + poch;
                        poch *= f;
                    }
                    xp /= x * x;
                }
                if k == 0 || k + 1 == count {
                    let m = 2 * depth + 1;
                    let est = (bf[depth] * poch.norm() * xp.norm() * (s + m as f64).norm() / (sigma + m as f64))
                        * (1.0 + lx);
                    worst = worst.max(est * abs_w);
                }
            }
            if self.has_pole() {
                let inv = 1.0 / (s - 1.0);
                v += self.weight_sum * inv;
                d -= self.weight_sum * inv * inv;
            }
            if self.log_q != 0.0 {
                let qs = (-s * self.log_q).exp();
                d = qs * (d - v * self.log_q);
                v *= qs;
            }
            out.push((v, d));
        }
        (out, worst)
    }

    /// As `grid_fixed`, doubling the number of terms until the remainder
    /// estimate meets the configured target.
    pub fn grid(
        &self,
        sigma0: f64,
        delta: f64,
        count: usize,
        t: f64,
        cfg: &EvalConfig,
    ) -> Result<Vec<(Complex64, Complex64)>> {
        cfg.validate()?;
        let sigma_min = sigma0.min(sigma0 + delta * (count.max(1) - 1) as f64);
        if !(sigma_min > 0.0) || !t.is_finite() {
            return Err(Error::DomainViolation(format!("Euler–Maclaurin needs σ > 0, got {sigma_min}")));
        }
        if self.has_pole() && t == 0.0 && (0..count).any(|k| sigma0 + k as f64 * delta == 1.0) {
            return Err(Error::PoleAtOne);
        }
        let mut n = (t.abs() / 2.0).ceil().max(cfg.min_terms as f64) as u64;
        let per = self.residues.len() as u64;
        loop {
            let (vals, est) = self.grid_fixed(sigma0, delta, count, t, n, cfg.bernoulli_depth);
            if est <= cfg.target_abs_error {
                return Ok(vals);
            }
            if 2 * n * per > cfg.max_terms {
                return Err(Error::AccuracyNotReached { target: cfg.target_abs_error, estimate: est });
            }
            n *= 2;
        }
    }

    pub fn eval(&self, s: Complex64, cfg: &EvalConfig) -> Result<(Complex64, Complex64)> {
        Ok(self.grid(s.re, 0.0, 1, s.im, cfg)?[0])
    }
}

fn primitive_nonprincipal(chi: &DirichletCharacter) -> Result<()> {
    if !chi.primitive || chi.is_principal() {
        return Err(Error::NonPrimitiveCharacter { modulus: chi.modulus, index: chi.index });
    }
    Ok(())
}

pub fn zeta_value(s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    Ok(Series::zeta().eval(s, cfg)?.0)
}

/// `(ζ(s), ζ'(s))`.
pub fn zeta_with_derivative(s: Complex64, cfg: &EvalConfig) -> Result<(Complex64, Complex64)> {
    Series::zeta().eval(s, cfg)
}

/// `ζ'/ζ(s)` from the differentiated expansion.
pub fn zeta_logderiv(s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    let (v, d) = Series::zeta().eval(s, cfg)?;
    Ok(d / v)
}

/// `(ζ, ζ')` at `σ₀ + kδ + it` for `k < count`, sharing one pass over `n`.
pub fn zeta_grid(sigma0: f64, delta: f64, count: usize, t: f64, cfg: &EvalConfig) -> Result<Vec<(Complex64, Complex64)>> {
    Series::zeta().grid(sigma0, delta, count, t, cfg)
}

pub fn dirichlet_value(s: Complex64, chi: &DirichletCharacter, cfg: &EvalConfig) -> Result<Complex64> {
    primitive_nonprincipal(chi)?;
    Ok(Series::character(chi).eval(s, cfg)?.0)
}

pub fn dirichlet_logderiv(s: Complex64, chi: &DirichletCharacter, cfg: &EvalConfig) -> Result<Complex64> {
    primitive_nonprincipal(chi)?;
    let (v, d) = Series::character(chi).eval(s, cfg)?;
    Ok(d / v)
}

/// `L'/L(s)` for a built-in descriptor, summed over its character factors.
pub fn l_logderiv(desc: &LFunctionDescriptor, s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    if desc.characters.is_empty() {
        return Err(Error::NoCoefficientProvider);
    }
    desc.characters.iter().try_fold(Complex64::new(0.0, 0.0), |acc, chi| {
        let (v, d) = Series::character(chi).eval(s, cfg)?;
        Ok(acc + d / v)
    })
}

/// `L(s)` for a built-in descriptor.
pub fn l_value(desc: &LFunctionDescriptor, s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    if desc.characters.is_empty() {
        return Err(Error::NoCoefficientProvider);
    }
    desc.characters
        .iter()
        .try_fold(Complex64::new(1.0, 0.0), |acc, chi| Ok(acc * Series::character(chi).eval(s, cfg)?.0))
}
