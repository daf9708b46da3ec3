//! `log ζ(σ + it)` by continuation along the horizontal segment from `2 + it`.

use super::em::zeta_grid;
use super::EvalConfig;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

/// Threshold on `|ζ|` below which the path is treated as hitting a zero.
pub const ZERO_THRESHOLD: f64 = 1e-6;

const START_SIGMA: f64 = 2.0;
const STEPS_PER_UNIT: f64 = 64.0;
const MAX_REFINE: u32 = 4;

/// Values of `log ζ` along the path, with the largest argument jump between
/// consecutive path points.
#[derive(Debug, Clone)]
pub struct LogPath {
    pub sigmas: Vec<f64>,
    pub values: Vec<Complex64>,
    pub max_jump: f64,
}

fn principal_arg_step(from: Complex64, to: Complex64) -> f64 {
    (to / from).arg()
}

fn check_zero(v: Complex64, sigma: f64) -> Result<()> {
    if v.norm() < ZERO_THRESHOLD {
        Err(Error::ZeroOnPath(sigma))
    } else {
        Ok(())
    }
}

/// Accumulated argument change from `hi` down to `lo` over `count` evenly
/// spaced points (both ends included), refining segments whose jump reaches π/2.
fn walk(hi: f64, lo: f64, count: usize, t: f64, cfg: &EvalConfig, depth: u32) -> Result<(Vec<Complex64>, Vec<f64>, f64)> {
    let delta = (lo - hi) / (count - 1) as f64;
    let vals: Vec<Complex64> = zeta_grid(hi, delta, count, t, cfg)?.into_iter().map(|p| p.0).collect();
    for (k, v) in vals.iter().enumerate() {
        check_zero(*v, hi + k as f64 * delta)?;
    }
    let mut args = vec![0.0; count];
    let mut max_jump: f64 = 0.0;
    for k in 1..count {
        let jump = principal_arg_step(vals[k - 1], vals[k]);
        let jump = if jump.abs() >= FRAC_PI_2 {
            if depth >= MAX_REFINE {
                return Err(Error::AccuracyNotReached { target: FRAC_PI_2, estimate: jump.abs() });
            }
            let a = hi + (k - 1) as f64 * delta;
            let (_, sub, sub_jump) = walk(a, a + delta, 9, t, cfg, depth + 1)?;
            max_jump = max_jump.max(sub_jump);
            sub[8]
        } else {
            max_jump = max_jump.max(jump.abs());
            jump
        };
        args[k] = args[k - 1] + jump;
    }
    Ok((vals, args, max_jump))
}

/// `log ζ` at evenly spaced `σ` from 2 down to `sigma_lo` (inclusive).
pub fn log_zeta_path(sigma_lo: f64, t: f64, cfg: &EvalConfig) -> Result<LogPath> {
    if t == 0.0 {
        return Err(Error::DomainViolation("log ζ tracking needs t ≠ 0".into()));
    }
    if sigma_lo >= START_SIGMA {
        let v = zeta_grid(sigma_lo, 0.0, 1, t, cfg)?[0].0;
        return Ok(LogPath { sigmas: vec![sigma_lo], values: vec![v.ln()], max_jump: 0.0 });
    }
    let count = ((START_SIGMA - sigma_lo) * STEPS_PER_UNIT).ceil() as usize + 1;
    let (vals, args, max_jump) = walk(START_SIGMA, sigma_lo, count, t, cfg, 0)?;
    // |ζ(2+it) − 1| < 1, so the principal logarithm is the continued one
    let arg0 = vals[0].arg();
    debug_assert!(arg0.abs() < PI / 2.0);
    let delta = (sigma_lo - START_SIGMA) / (count - 1) as f64;
    let sigmas = (0..count).map(|k| START_SIGMA + k as f64 * delta).collect();
    let values = vals.iter().zip(&args).map(|(v, a)| Complex64::new(v.norm().ln(), arg0 + a)).collect();
    Ok(LogPath { sigmas, values, max_jump })
}

/// `log ζ(σ + it)` on the branch tending to 0 as `σ → ∞`.
pub fn log_zeta_tracked(sigma: f64, t: f64, cfg: &EvalConfig) -> Result<Complex64> {
    let path = log_zeta_path(sigma, t, cfg)?;
    Ok(*path.values.last().expect("nonempty path"))
}
