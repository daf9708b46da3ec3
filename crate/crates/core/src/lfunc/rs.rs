//! Hardy's `Z`-function and a Gram-block zero finder for the ordinates of
//! the first zeros of `ζ`.

use super::em::zeta_value;
use super::rs_coeffs::RS_COEFFS;
use super::EvalConfig;
use crate::error::{Error, Result};
use crate::numeric::brent;
use crate::special::ln_gamma;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Below this height `Z` is evaluated through Euler–Maclaurin.
const EM_HEIGHT: f64 = 1000.0;

/// Riemann–Siegel theta `θ(t) = Im log Γ(¼ + it/2) − (t/2) log π`.
pub fn siegel_theta(t: f64) -> f64 {
    if t.abs() < 50.0 {
        return ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln();
    }
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * 127.0 / 430080.0)))
}

fn poly(c: &[f64], z: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &x| acc * z + x)
}

/// `Z(t)` by the Riemann–Siegel formula with the first five corrections.
pub fn z_riemann_siegel(t: f64) -> f64 {
    let a = (t / (2.0 * PI)).sqrt();
    let n = a.floor() as u64;
    let p = a - n as f64;
    let th = siegel_theta(t);
    let main: f64 = (1..=n).map(|k| (th - t * (k as f64).ln()).cos() / (k as f64).sqrt()).sum();
    let z = p - 0.5;
    let mut rem = 0.0;
    let mut scale = 1.0;
    for c in RS_COEFFS {
        rem += poly(c, z) * scale;
        scale /= a;
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    2.0 * main + sign * rem / a.sqrt()
}

/// `Z(t) = e^{iθ(t)} ζ(½ + it)` through Euler–Maclaurin.
pub fn z_euler_maclaurin(t: f64, cfg: &EvalConfig) -> Result<f64> {
    let v = zeta_value(Complex64::new(0.5, t), cfg)?;
    Ok((Complex64::from_polar(1.0, siegel_theta(t)) * v).re)
}

/// `Z(t)`, choosing the evaluation method by height.
pub fn hardy_z(t: f64) -> f64 {
    if t < EM_HEIGHT {
        z_euler_maclaurin(t, &EvalConfig::default()).expect("Euler–Maclaurin converges on the critical line")
    } else {
        z_riemann_siegel(t)
    }
}

/// Gram point `g_n` with `θ(g_n) = nπ`, for `n ≥ −1`.
pub fn gram_point(n: i64, guess: f64) -> f64 {
    let target = n as f64 * PI;
    let mut g = guess.max(9.0);
    for _ in 0..50 {
        let step = (siegel_theta(g) - target) / (0.5 * (g / (2.0 * PI)).ln());
        g -= step;
        if step.abs() < 1e-13 * g {
            break;
        }
    }
    g
}

fn sign_changes(f: &impl Fn(f64) -> f64, lo: f64, hi: f64, pieces: usize) -> Vec<(f64, f64)> {
    let h = (hi - lo) / pieces as f64;
    let mut out = Vec::new();
    let mut a = lo;
    let mut fa = f(a);
    for k in 1..=pieces {
        let b = if k == pieces { hi } else { lo + k as f64 * h };
        let fb = f(b);
        if fa.signum() != fb.signum() {
            out.push((a, b));
        }
        a = b;
        fa = fb;
    }
    out
}

/// Ordinates of the first `count` zeros of `ζ` on the critical line.
///
/// Zeros are isolated in Gram blocks (runs between consecutive good Gram
/// points); each block is subdivided until it shows as many sign changes of
/// `Z` as it has Gram intervals. This presumes Rosser's rule, which holds
/// far beyond the heights reachable here.
pub fn generate_zeros(count: usize) -> Result<Vec<f64>> {
    let z = |t: f64| hardy_z(t);
    let mut zeros = Vec::with_capacity(count);
    let mut n: i64 = -1;
    let mut g = gram_point(-1, 10.0);
    let mut block_start = (n, g);
    while zeros.len() < count {
        // advance to the next good Gram point
        loop {
            n += 1;
            g = gram_point(n, g + 2.0 * PI / (g / (2.0 * PI)).ln());
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            if sign * z(g) > 0.0 {
                break;
            }
        }
        let (n0, g0) = block_start;
        let expected = (n - n0) as usize;
        let mut pieces = 2 * expected;
        let brackets = loop {
            let b = sign_changes(&z, g0, g, pieces);
            if b.len() == expected {
                break b;
            }
            if b.len() > expected || pieces > expected * 4096 {
                return Err(Error::AccuracyNotReached { target: expected as f64, estimate: b.len() as f64 });
            }
            pieces *= 4;
        };
        for (a, b) in brackets {
            if zeros.len() == count {
                break;
            }
            zeros.push(brent(z, a, b, 2e-15 * b)?);
        }
        block_start = (n, g);
    }
    Ok(zeros)
}
