//! Upper bounds for the weighted prime sums `S`, `Ŝ` and the tail `E_x`.

use super::{ge, le, BoundParameters, Tau};
use crate::consts::{EULER_GAMMA, LN_2, PI};
use crate::error::{Error, Result};
use crate::kernel::{big_m, coef_a, eta, integral_theta1, theta1};
use crate::selberg::LFunctionDescriptor;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PrimeTerm {
    /// `S` for σ ≠ 1 under case 1 or 2.
    SCase1or2,
    /// `S` for σ in the band around 1.
    SNear1,
    /// `S` at σ = 1.
    SAt1,
    ShatCase1,
    ShatCase2,
    ShatAt1,
    Ex,
}

pub(crate) fn s_shared_tail(sigma: f64, alpha: f64, tau: Tau) -> (f64, f64) {
    let s = 2.0 * sigma - 1.0;
    let arch = sigma * 2f64.powf(1.5 - sigma) * (4.0 + (2.0 + s * LN_2).powi(2)) / (8.0 * PI * s.powi(3));
    let mix = ((2.0 * (alpha + 1.0) * sigma - 1.0) * alpha.exp_m1() / (2.0 * PI * alpha)) * tau.ll.powi(2)
        / (s * tau.pow(s));
    (arch, mix)
}

pub(crate) fn shat_shared_tail(sigma: f64, alpha: f64, tau: Tau) -> (f64, f64) {
    let s = 2.0 * sigma - 1.0;
    let arch = 2f64.powf(1.5 - sigma) * (-1.0 + sigma * (4.0 - LN_2) + sigma * sigma * 2.0 * LN_2)
        / (8.0 * PI * s * s);
    let mix = alpha.exp_m1() * tau.ll / (4.0 * PI * alpha * tau.pow(s));
    (arch, mix)
}

/// `S/m` for σ ≠ 1.
pub(crate) fn s_general(sigma: f64, alpha: f64, tau: Tau) -> Result<f64> {
    let w = 1.0 - sigma;
    let (arch, mix) = s_shared_tail(sigma, alpha, tau);
    Ok(coef_a(1.0, alpha, sigma, sigma)? * tau.pow(2.0 * w) - sigma * 2f64.powf(w) / w + arch + mix)
}

/// `S/m` in the band `1 − α₂/LL ≤ σ ≤ 1 + α₃/LL`.
pub(crate) fn s_near1(sigma: f64, alpha: f64, m_big: f64, ll0: f64, tau: Tau) -> Result<f64> {
    let w = (1.0 - sigma).abs();
    let (arch, mix) = s_shared_tail(sigma, alpha, tau);
    Ok(2.0 * tau.ll + 1.0 - sigma * LN_2
        + 4.0 * theta1(m_big)? * w * tau.ll.powi(2)
        + LN_2 * LN_2 * theta1(m_big * LN_2 / (2.0 * ll0))? * sigma * w
        + arch
        + mix)
}

/// `S/m` at σ = 1.
pub(crate) fn s_at1(alpha: f64, tau: Tau) -> f64 {
    2.0 * tau.ll - EULER_GAMMA - alpha
        + alpha.exp_m1() * (2.0 * alpha + 1.0) * tau.ll.powi(2) / (2.0 * PI * alpha * tau.l)
        + 0.24 * alpha.exp() / tau.l
}

/// `Ŝ/m` under case 1.
pub(crate) fn shat_case1(sigma: f64, alpha: f64, nu1: f64, nu2: f64, tau: Tau) -> Result<f64> {
    let w = 1.0 - sigma;
    let s = 2.0 * sigma - 1.0;
    let e = eta(alpha, sigma, tau.ll)?;
    let (arch, mix) = shat_shared_tail(sigma, alpha, tau);
    let main = e * (coef_a(1.0, alpha, sigma, sigma)? * tau.pow(2.0 * w) / tau.ll - 1.0 / (w * tau.ll));
    let nu2_term = (nu2 * e).powi(2) * (-2.0 * alpha * w / s).exp() * tau.pow(2.0 * w) / (w * w * tau.ll.powi(2));
    let nu1_term = (-2.0 * alpha * w / (s * nu2)).exp() * tau.pow(2.0 * w / nu2) / (nu1 * nu1);
    let consts = (2.0 * tau.ll).ln() + (1.0 - sigma * 2f64.powf(w)) / (w * LN_2) - LN_2.ln() + integral_theta1(nu1)?;
    Ok(main + nu2_term + nu1_term + consts + arch + mix)
}

/// `Ŝ/m` under case 2 with σ ≠ 1.
pub(crate) fn shat_case2(sigma: f64, alpha: f64, alpha2: f64, m_big: f64, ll0: f64, tau: Tau) -> Result<f64> {
    let w = (1.0 - sigma).abs();
    let e = eta(alpha, sigma, tau.ll)?;
    let (arch, mix) = shat_shared_tail(sigma, alpha, tau);
    Ok((2.0 * tau.ll).ln()
        + 2.0 * (2.0 * e * theta1(m_big)? + theta1(2.0 * alpha2)?) * w * tau.ll
        + 1.0 / LN_2
        - LN_2.ln()
        - sigma
        + LN_2 * theta1(m_big * LN_2 / (2.0 * ll0))? * sigma * w
        + 2.0 * e
        + arch
        + mix)
}

/// `Ŝ/m` at σ = 1.
pub(crate) fn shat_at1(alpha: f64, tau: Tau) -> Result<f64> {
    if !(tau.ll > alpha) {
        return Err(Error::DomainViolation(format!("Ŝ at σ=1 needs loglogτ > α, got {}", tau.ll)));
    }
    let ll = tau.ll;
    let ea = alpha.exp();
    Ok((2.0 * ll).ln() + EULER_GAMMA + (1.0 - ll / alpha) * (1.0 - alpha / ll).ln() - 1.0
        + ((1.0 + ea * (4.0 * alpha - 1.0)) * ll + ea * (7.0 * alpha - 4.0 * (alpha * alpha + 1.0)) + 4.0)
            / (4.0 * PI * alpha * tau.l))
}

/// `E_x/m`.
pub(crate) fn ex_bound(sigma: f64, alpha: f64, tau: Tau) -> Result<f64> {
    let e = eta(alpha, sigma, tau.ll)?;
    let s = 2.0 * sigma - 1.0;
    Ok(2.0 * e * (alpha / s).exp() / (tau.l * tau.ll)
        + 5.0 * (2.0 * alpha / s).exp() * (1.0 + tau.ll / e) / (16.0 * PI * tau.l * tau.l))
}

fn range_error(text: String) -> Error {
    Error::PreconditionFailed(text)
}

/// Bound for the selected prime-side quantity, including the factor `m`.
pub fn prime_term_bound(
    desc: &LFunctionDescriptor,
    sigma: f64,
    log_tau: f64,
    params: &BoundParameters,
    which: PrimeTerm,
) -> Result<f64> {
    let m = desc.m()?;
    if !(log_tau > 1.0) {
        return Err(Error::LogTauTooSmall(log_tau));
    }
    let tau = Tau { l: log_tau, ll: log_tau.ln() };
    let ll0 = params.log_log_tau0.unwrap_or(tau.ll);
    let alpha = params.alpha;
    if alpha < LN_2 {
        return Err(range_error(format!("α = {alpha} ≥ log 2")));
    }
    let m_big = big_m(params.alpha2, params.alpha3);
    let in_range1 = ge(sigma, 0.5 + params.alpha1 / tau.ll) && sigma < 1.0;
    let in_range2 = ge(sigma, 1.0 - params.alpha2 / tau.ll) && le(sigma, 1.0 + params.alpha3 / tau.ll);
    let per_m = match which {
        PrimeTerm::SCase1or2 => {
            if sigma == 1.0 || !(in_range1 || in_range2) {
                return Err(range_error(format!("σ = {sigma} ≠ 1 in the case-1 or case-2 range")));
            }
            s_general(sigma, alpha, tau)?
        }
        PrimeTerm::SNear1 => {
            if !in_range2 {
                return Err(range_error(format!("σ = {sigma} in [1 − α₂/LL, 1 + α₃/LL]")));
            }
            s_near1(sigma, alpha, m_big, ll0, tau)?
        }
        PrimeTerm::SAt1 | PrimeTerm::ShatAt1 => {
            if sigma != 1.0 {
                return Err(range_error(format!("σ = {sigma} must equal 1")));
            }
            if !ge(tau.l, alpha.exp() * 60f64.sqrt()) {
                return Err(range_error(format!("log τ = {} ≥ e^α √60", tau.l)));
            }
            if which == PrimeTerm::SAt1 {
                s_at1(alpha, tau)
            } else {
                shat_at1(alpha, tau)?
            }
        }
        PrimeTerm::ShatCase1 => {
            if !in_range1 {
                return Err(range_error(format!("σ = {sigma} in [1/2 + α₁/LL, 1)")));
            }
            shat_case1(sigma, alpha, params.nu1, params.nu2, tau)?
        }
        PrimeTerm::ShatCase2 => {
            if sigma == 1.0 || !in_range2 {
                return Err(range_error(format!("σ = {sigma} ≠ 1 in [1 − α₂/LL, 1 + α₃/LL]")));
            }
            shat_case2(sigma, alpha, params.alpha2, m_big, ll0, tau)?
        }
        PrimeTerm::Ex => ex_bound(sigma, alpha, tau)?,
    };
    Ok(m * per_m)
}
