//! Fully numeric special cases: ζ with `t ≥ 10⁶`, the `m = d` family at
//! `loglogτ ≥ 13`, and the Dedekind residue bound.

use super::{ge, require_strong_lambda, standard_assumptions, BoundResult, CaseTag, Checks, Target, Tau, Terms};
use crate::consts::EULER_GAMMA;
use crate::error::{Error, Result};
use crate::kernel::{a_hat, a_tilde, eta};
use crate::selberg::{EvaluationPoint, LFunctionDescriptor};

const COR9_ALPHA: f64 = 1.278;
const COR9_T_MIN: f64 = 1e6;

/// Lower bound on `loglogτ` for the `m = d` family bounds.
pub const COR10_LOG_LOG_TAU0: f64 = 13.0;

/// Bounds for `ζ'/ζ(σ+it)` and `log ζ(σ+it)` with `L = log t`.
pub fn zeta_cor9(sigma: f64, t: f64) -> Result<(BoundResult, BoundResult)> {
    if !(t > std::f64::consts::E) {
        return Err(Error::PreconditionFailed(format!("t = {t} ≥ 10⁶")));
    }
    let l = t.ln();
    let tau = Tau { l, ll: l.ln() };
    if !(sigma > 0.5 && sigma < 1.0) {
        return Err(Error::NoCaseApplies(sigma));
    }
    let alpha = COR9_ALPHA;
    let mut ch = Checks::default();
    ch.assume("RH");
    ch.check(format!("t = {t} ≥ 10⁶"), t >= COR9_T_MIN).check(
        format!("σ = {sigma} in [1/2 + 1/loglog t, 1) = [{}, 1)", 0.5 + 1.0 / tau.ll),
        ge(sigma, 0.5 + 1.0 / tau.ll),
    );
    let w = 1.0 - sigma;
    let s = 2.0 * sigma - 1.0;
    let e = eta(alpha, sigma, tau.ll)?;

    let mut ld = Terms::default();
    ld.add("Â(1,α,σ)(log t)^{2−2σ}", a_hat(1.0, alpha, sigma)? * tau.pow(2.0 * w))
        .add("−σ2^{1−σ}/(1−σ)", -sigma * 2f64.powf(w) / w)
        .add("4.2(log t)^{3−4σ}", 4.2 * tau.pow(3.0 - 4.0 * sigma))
        .add("0.64/(2σ−1)³", 0.64 / s.powi(3))
        .add("4(loglog t)²/((2σ−1)(log t)^{2σ−1})", 4.0 * tau.ll.powi(2) / (s * tau.pow(s)))
        .add("2/(log t)^{1/3}", 2.0 / tau.pow(1.0 / 3.0));

    let mut lg = Terms::default();
    lg.add("Ã(1,α,σ,t)(log t)^{2−2σ}/loglog t", a_tilde(1.0, alpha, sigma, tau.ll)? * tau.pow(2.0 * w) / tau.ll)
        .add("−η/((1−σ)loglog t)", -e / (w * tau.ll))
        .add("log(2 loglog t)", (2.0 * tau.ll).ln())
        .add("3.24(log t)^{2−2σ}/((1−σ)²(loglog t)²)", 3.24 * tau.pow(2.0 * w) / (w * w * tau.ll.powi(2)))
        .add("1.04(log t)^{3−4σ}/loglog t", 1.04 * tau.pow(3.0 - 4.0 * sigma) / tau.ll)
        .add("4.7/(2σ−1)²", 4.7 / (s * s))
        .add("1.53 loglog t/(log t)^{2σ−1}", 1.53 * tau.ll / tau.pow(s))
        .add("7.75/((log t)^{1/3} loglog t)", 7.75 / (tau.pow(1.0 / 3.0) * tau.ll))
        .add("0.21 loglog t/(log t)^{2/3}", 0.21 * tau.ll / tau.pow(2.0 / 3.0));
    Ok((ld.finish(Target::LogDeriv, CaseTag::Cor9, &ch), lg.finish(Target::LogL, CaseTag::Cor9, &ch)))
}

/// The four simplified bounds for `m = d`: the strip pair (valid for
/// `0.6 ≤ σ < 1`) and the 1-line pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Cor10Bounds {
    pub log_deriv: BoundResult,
    pub log_l: BoundResult,
    pub log_deriv_line1: BoundResult,
    pub log_l_line1: BoundResult,
}

pub fn family_cor10(desc: &LFunctionDescriptor, point: &EvaluationPoint) -> Result<Cor10Bounds> {
    require_strong_lambda(desc)?;
    let m = desc.euler_order.ok_or(Error::MissingEulerOrder)?;
    let d = desc.degree;
    if (m as f64 - d).abs() > 1e-12 {
        return Err(Error::EulerOrderMismatch { m, d });
    }
    let sigma = point.sigma;
    if !(sigma > 0.5) {
        return Err(Error::NoCaseApplies(sigma));
    }
    let tau = Tau::of(point);
    let (l, ll) = (tau.l, tau.ll);
    let lll = ll.ln();

    let mut base = Checks::default();
    standard_assumptions(&mut base);
    base.check(format!("loglogτ = {ll} ≥ 13"), ge(ll, COR10_LOG_LOG_TAU0));
    let t_floor = (2.0 * desc.mu_plus()).max(desc.pole_order as f64 + 2000.0);
    match point.t {
        Some(t) => {
            base.check(format!("|t| = {} ≥ max{{2μ⁺, m_L + 2000}} = {t_floor}", t.abs()), t.abs() >= t_floor);
        }
        None => {
            base.assume(format!("|t| ≥ max{{2μ⁺, m_L + 2000}} = {t_floor}"));
        }
    }
    let mut strip = base.clone();
    strip.check(format!("σ = {sigma} in [0.6, 1)"), ge(sigma, 0.6) && sigma < 1.0);
    let mut line = base;
    line.check(format!("σ = {sigma} equals 1"), sigma == 1.0);

    let w = 1.0 - sigma;
    let p = tau.pow(2.0 * w);
    let mut ld = Terms::default();
    let mut lg = Terms::default();
    if w != 0.0 {
        ld.add("d((log τ)^{2−2σ} − σ2^{1−σ})/(1−σ)", d * (p - sigma * 2f64.powf(w)) / w);
        lg.add("d((log τ)^{2−2σ} − 1)/(2(1−σ)loglogτ)", d * (p - 1.0) / (2.0 * w * ll));
    } else {
        // continuous extension at σ = 1
        ld.add("d((log τ)^{2−2σ} − σ2^{1−σ})/(1−σ)", d * (2.0 * ll + 1.0 - std::f64::consts::LN_2));
        lg.add("d((log τ)^{2−2σ} − 1)/(2(1−σ)loglogτ)", d);
    }
    ld.add("(1.796 − 1.278d)(log τ)^{2−2σ}", (1.796 - 1.278 * d) * p)
        .add("4(log τ)^{3−4σ}", 4.0 * tau.pow(3.0 - 4.0 * sigma))
        .add("90d", 90.0 * d);
    lg.add("(0.898 − 0.639d)(log τ)^{2−2σ}/loglogτ", (0.898 - 0.639 * d) * p / ll)
        .add("d(logloglogτ + 8)", d * (lll + 8.0));
    if w != 0.0 {
        lg.add("3.4d(log τ)^{2−2σ}/((1−σ)²(loglogτ)²)", 3.4 * d * p / (w * w * ll * ll));
    }

    let mut ld1 = Terms::default();
    ld1.add("2d loglogτ", 2.0 * d * ll)
        .add("2.265 − 2.763d", 2.265 - 2.763 * d)
        .add("4d(loglogτ)²/log τ", 4.0 * d * ll * ll / l);
    let mut lg1 = Terms::default();
    lg1.add("d logloglogτ", d * lll)
        .add("d log(2e^γ)", d * (2f64.ln() + EULER_GAMMA))
        .add("d/loglogτ", d / ll);

    Ok(Cor10Bounds {
        log_deriv: ld.finish(Target::LogDeriv, CaseTag::Cor10, &strip),
        log_l: lg.finish(Target::LogL, CaseTag::Cor10, &strip),
        log_deriv_line1: ld1.finish(Target::LogDeriv, CaseTag::Cor10Line1, &line),
        log_l_line1: lg1.finish(Target::LogL, CaseTag::Cor10Line1, &line),
    })
}

/// Upper bound for the residue at `s = 1` of the Dedekind zeta function of
/// a number field of degree `n_k ≥ 2` and discriminant `|Δ| ≥ 5.4·10⁶`.
pub fn dedekind_residue_bound(n_k: u32, abs_disc: f64) -> Result<f64> {
    if n_k < 2 {
        return Err(Error::PreconditionFailed(format!("n_K = {n_k} ≥ 2")));
    }
    if !(abs_disc >= 5.4e6) {
        return Err(Error::PreconditionFailed(format!("|Δ| = {abs_disc} ≥ 5.4·10⁶")));
    }
    let ll = abs_disc.ln().ln();
    Ok(((1.271 + 2.475 / ll).exp() * ll).powi(n_k as i32 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::selberg::zeta;

    #[test]
    fn cor9_term_oracle() {
        let (ld, lg) = zeta_cor9(0.75, 1e6).unwrap();
        let want = [15.07, -3.57, 4.2, 5.12, 14.84, 0.83];
        for (t, w) in ld.terms.iter().zip(want) {
            assert!((t.value - w).abs() < 0.01, "{}: {} vs {w}", t.label, t.value);
        }
        assert!((ld.value - 36.49).abs() < 0.02);
        // 1/2 + 1/loglog(10⁶) ≈ 0.881 > 0.75
        assert!(!ld.certified && !lg.certified);
        assert!(zeta_cor9(0.95, 1e6).unwrap().0.certified);
        assert!(zeta_cor9(0.95, 1e5).unwrap().0.require().is_err());
    }

    #[test]
    fn cor10_values() {
        let z = zeta();
        let pt = EvaluationPoint::from_log_log_tau(0.75, 13.0).unwrap();
        let b = family_cor10(&z, &pt).unwrap();
        assert!((b.log_deriv.value - 3095.5).abs() < 0.5, "{}", b.log_deriv.value);
        assert!(b.log_deriv.certified);
        assert!(!b.log_deriv_line1.certified);
        assert_eq!(b.log_deriv_line1.term("2.265 − 2.763d"), Some(2.265 - 2.763));
        let low = EvaluationPoint::from_log_log_tau(0.75, 12.9).unwrap();
        assert!(family_cor10(&z, &low).unwrap().log_deriv.require().is_err());
        let prod = crate::selberg::builtin(&crate::selberg::Builtin::parse("product(zeta,zeta)").unwrap()).unwrap();
        assert!(family_cor10(&prod, &pt).is_ok());
    }

    #[test]
    fn dedekind_plug() {
        let v = dedekind_residue_bound(2, 5.4e6).unwrap();
        assert!((v - 24.10).abs() < 0.05, "{v}");
        assert!(dedekind_residue_bound(2, 1e6).is_err());
        assert!(dedekind_residue_bound(1, 1e7).is_err());
        let v3 = dedekind_residue_bound(3, 5.4e6).unwrap();
        assert!((v3 - v * v).abs() < 1e-9 * v3);
    }
}
