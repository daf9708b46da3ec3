//! The bound on the Poisson-kernel sum over zeros and the archimedean
//! remainders `R₁`, `R₂`.

use super::{conductor_ratio, ge, le, require_strong_lambda};
use crate::error::{Error, Result};
use crate::kernel::{frak_a, frak_b, frak_b_real_point, trigamma_quarter_bound};
use crate::quad::adaptive_gk;
use crate::selberg::LFunctionDescriptor;

/// Upper bound for `Σ_γ (σ−½)/((σ−½)² + (t−γ)²)`.
///
/// `t` may be `None` when τ is too large for a representable ordinate; the
/// `|t| ≥ t₀` condition is then the caller's responsibility.
pub fn zero_sum_bound(
    desc: &LFunctionDescriptor,
    sigma: f64,
    t: Option<f64>,
    log_tau: f64,
    alpha1: f64,
    t0: f64,
    log_log_tau0: f64,
) -> Result<f64> {
    require_strong_lambda(desc)?;
    let m = desc.m()?;
    let ll = log_tau.ln();
    let fail = |s: String| Err(Error::PreconditionFailed(s));
    if !(alpha1 > 0.0) {
        return fail(format!("α₁ = {alpha1} > 0"));
    }
    if !(ge(sigma, 0.5 + alpha1 / ll) && le(sigma, 1.5)) {
        return fail(format!("σ = {sigma} in [1/2 + α₁/loglogτ, 3/2]"));
    }
    let log_tau0 = log_log_tau0.exp();
    if !(ge(log_tau, log_tau0) && ge(log_tau0, 60f64.sqrt()) && ge(log_log_tau0, alpha1)) {
        return fail(format!("τ ≥ τ₀ ≥ max{{e^√60, exp(e^α₁)}} with loglogτ₀ = {log_log_tau0}"));
    }
    let floor = (2.0 * desc.mu_plus()).max(1.0);
    if t0 < floor {
        return fail(format!("t₀ = {t0} ≥ max{{2μ⁺, 1}} = {floor}"));
    }
    if let Some(t) = t {
        if t.abs() < t0 {
            return fail(format!("|t| = {} ≥ t₀ = {t0}", t.abs()));
        }
    }
    let m_l = desc.pole_order as f64;
    let a = frak_a(m_l, alpha1, t0)?;
    let b = frak_b(desc.degree, m, m_l, alpha1, t0, log_tau0)?;
    Ok(log_tau / 2.0 + a * ((2.0 - 2.0 * sigma) * ll).exp() + 2.0 * m * ll + b)
}

/// The `t = 0` variant with τ replaced by `q_L` and `α₁ = ½ loglog q₀`.
pub fn zero_sum_bound_real_point(desc: &LFunctionDescriptor, sigma: f64, log_q0: f64) -> Result<f64> {
    require_strong_lambda(desc)?;
    let m = desc.m()?;
    let log_q = desc.log_conductor;
    if !(log_q >= log_q0 && log_q0 > 1.0) {
        return Err(Error::ConductorTooSmall(log_q));
    }
    let alpha1 = 0.5 * log_q0.ln();
    let ll = log_q.ln();
    if !(ge(sigma, 0.5 + alpha1 / ll) && le(sigma, 1.5)) {
        return Err(Error::PreconditionFailed(format!("σ = {sigma} in [1/2 + α₁/loglog q, 3/2]")));
    }
    let a = frak_a(0.0, alpha1, 1.0)?;
    let b = frak_b_real_point(desc.degree, m, log_q0, desc.mu_plus())?;
    Ok(log_q / 2.0 + a * ((2.0 - 2.0 * sigma) * ll).exp() + 2.0 * m * ll + b)
}

fn r1_at(desc: &LFunctionDescriptor, sigma: f64, log_tau: f64, alpha: f64) -> f64 {
    let s = 2.0 * sigma - 1.0;
    let lambda_sum = desc.degree * trigamma_quarter_bound();
    (sigma - 0.5) * (1.0 + (2.0 * alpha * sigma / s).exp()) * lambda_sum
        / (alpha * (2.0 * sigma * log_tau.ln()).exp())
}

fn r2_at(desc: &LFunctionDescriptor, sigma: f64, log_tau: f64, alpha: f64) -> f64 {
    let m_l = desc.pole_order as f64;
    if m_l == 0.0 {
        return 0.0;
    }
    let s = 2.0 * sigma - 1.0;
    m_l * (sigma - 0.5) * (1.0 + (2.0 * alpha * (sigma - 1.0) / s).exp()) / alpha
        * conductor_ratio(desc, log_tau)
        * ((2.0 - 2.0 * sigma) * log_tau.ln()).exp()
}

/// `(R₁(σ), R₂(σ))`, or their integrals over `[σ, 3/2]` when `integrated`.
pub fn r_terms(desc: &LFunctionDescriptor, sigma: f64, log_tau: f64, alpha: f64, integrated: bool) -> Result<(f64, f64)> {
    require_strong_lambda(desc)?;
    if !(sigma > 0.5) || !(alpha > 0.0) || !(log_tau > 1.0) {
        return Err(Error::DomainViolation(format!("R-terms need σ > 1/2, α > 0, log τ > 1 (σ={sigma})")));
    }
    if !integrated {
        return Ok((r1_at(desc, sigma, log_tau, alpha), r2_at(desc, sigma, log_tau, alpha)));
    }
    if sigma >= 1.5 {
        return Ok((0.0, 0.0));
    }
    let r1 = adaptive_gk(|u| r1_at(desc, u, log_tau, alpha), sigma, 1.5, 1e-13, 2000)?;
    let r2 = adaptive_gk(|u| r2_at(desc, u, log_tau, alpha), sigma, 1.5, 1e-13, 2000)?;
    Ok((r1, r2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::selberg::{builtin, zeta, Builtin};

    #[test]
    fn zeta_zero_sum_assembly() {
        let z = zeta();
        let l: f64 = 5e5;
        let v = zero_sum_bound(&z, 1.0, None, l, 6.5, 1e6, l.ln()).unwrap();
        let rest = v - 250000.0;
        assert!(rest > 0.0 && rest < 40.0, "{rest}");
        // independent assembly
        let a = frak_a(1.0, 6.5, 1e6).unwrap();
        let b = frak_b(1.0, 1.0, 1.0, 6.5, 1e6, l).unwrap();
        // (log τ)^{2−2σ} = 1 at σ = 1
        assert!((v - (l / 2.0 + a + 2.0 * l.ln() + b)).abs() < 1e-9);
    }

    #[test]
    fn zero_sum_rejects_short_sigma() {
        let z = zeta();
        assert!(zero_sum_bound(&z, 0.6, None, 5e5, 6.5, 1e6, 5e5f64.ln()).is_err());
        assert!(zero_sum_bound(&z, 1.0, Some(10.0), 5e5, 6.5, 1e6, 5e5f64.ln()).is_err());
    }

    #[test]
    fn r_term_properties() {
        let chi = builtin(&Builtin::Dirichlet { modulus: 5, index: 2 }).unwrap();
        let (_, r2) = r_terms(&chi, 0.8, 30.0, 1.278, false).unwrap();
        assert_eq!(r2, 0.0);
        let z = zeta();
        let (r1, r2) = r_terms(&z, 1.0, 16.1, 1.278, false).unwrap();
        // (q/τ)^{2/d} = e^{−2·16.1}
        let pole = 0.5 * (1.0 + 1.0) / 1.278 * (-2.0f64 * 16.1).exp();
        assert!((r2 - pole).abs() < 1e-25);
        let prod = builtin(&Builtin::parse("product(zeta,zeta)").unwrap()).unwrap();
        let (r1b, _) = r_terms(&prod, 1.0, 16.1, 1.278, false).unwrap();
        assert!((r1b - 2.0 * r1).abs() < 1e-15 * r1b);
        let (i1, _) = r_terms(&z, 0.8, 30.0, 1.278, true).unwrap();
        assert!(i1 > 0.0);
    }
}
