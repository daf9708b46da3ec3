//! Main terms of the asymptotic (O-term) statements. These are diagnostics
//! only: every result has `certified = false` and the omitted error terms
//! are listed by name.

use super::{le, require_strong_lambda, BoundResult, CaseTag, Checks, Target, Tau, Terms};
use crate::consts::{EULER_GAMMA, LN_2};
use crate::error::{Error, Result};
use crate::kernel::{a_hat, a_tilde, coef_a, eta, m_functions_first_moment, m_functions_mean_square};
use crate::selberg::{EvaluationPoint, LFunctionDescriptor};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum AsymptoticTheorem {
    /// General strip bound with the Ramanujan constant `C_R`.
    Thm1,
    /// Strip bound under the prime-moment hypothesis, in terms of `m₁(τ)`.
    Thm2,
    /// 1-line bound under the prime-moment hypothesis.
    Thm3,
    /// Non-explicit bound for polynomial Euler products.
    Thm4,
    /// Leading terms of `Thm4`.
    Thm5,
    /// 1-line bound for polynomial Euler products.
    Thm6,
}

impl AsymptoticTheorem {
    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_ascii_lowercase()))
            .map_err(|_| Error::ParseError(format!("unknown theorem `{s}`")))
    }

    fn tag(self) -> CaseTag {
        match self {
            Self::Thm1 => CaseTag::Thm1,
            Self::Thm2 => CaseTag::Thm2,
            Self::Thm3 => CaseTag::Thm3,
            Self::Thm4 => CaseTag::Thm4,
            Self::Thm5 => CaseTag::Thm5,
            Self::Thm6 => CaseTag::Thm6,
        }
    }
}

/// Inputs beyond the descriptor. `c_r` defaults to the descriptor's
/// Ramanujan constant when `None`; `c_p1`, `c_p2` are the moment constants
/// feeding `m₁ … m₄`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AsymptoticInputs {
    pub alpha: f64,
    pub epsilon: f64,
    pub c_r: Option<f64>,
    pub c_p1: f64,
    pub c_p2: f64,
    pub first_moment: bool,
}

impl Default for AsymptoticInputs {
    fn default() -> Self {
        Self { alpha: 1.278, epsilon: 0.0, c_r: None, c_p1: 1.0, c_p2: 1.0, first_moment: false }
    }
}

fn fail(text: String) -> Error {
    Error::PreconditionFailed(text)
}

/// Evaluates the non-O summands of the chosen statement at `point`.
pub fn asymptotic_main_terms(
    desc: &LFunctionDescriptor,
    point: &EvaluationPoint,
    which: AsymptoticTheorem,
    inputs: &AsymptoticInputs,
) -> Result<(BoundResult, BoundResult)> {
    let tau = Tau::of(point);
    let (sigma, alpha, ll) = (point.sigma, inputs.alpha, tau.ll);
    if alpha < LN_2 {
        return Err(fail(format!("α = {alpha} ≥ log 2")));
    }
    let mut ch = Checks::default();
    ch.assume("GRH for L");
    ch.check("asymptotic statement: O-terms not evaluated", false);
    let mut ld = Terms::default();
    let mut lg = Terms::default();
    let (sym_ld, sym_lg): (&[&str], &[&str]);
    let ea = alpha.exp();
    let w = 1.0 - sigma;
    match which {
        AsymptoticTheorem::Thm1 => {
            let eps = inputs.epsilon;
            let c_r = inputs.c_r.unwrap_or(desc.ramanujan_constant);
            if !(0.0..0.5).contains(&eps) || !(sigma - eps > 0.5) || !(sigma < 1.0) {
                return Err(fail(format!("1/2 < σ − ε, σ < 1 (σ = {sigma}, ε = {eps})")));
            }
            let a = (1.0 + eps) * c_r;
            let grow = tau.pow(2.0 * (w + eps));
            let main = coef_a(a, alpha, sigma - eps, sigma)? * grow;
            let e = eta(alpha, sigma, ll)?;
            ld.add("A((1+ε)C_R,α,σ−ε,σ)(log τ)^{2(1−σ+ε)}", main)
                .add("(e^α+1)/(2α)(log τ)^{2−2σ}", (ea + 1.0) / (2.0 * alpha) * tau.pow(2.0 * w))
                .add("−(1+ε)C_Rσ2^{1−σ+ε}/(1−σ+ε)", -a * sigma * 2f64.powf(w + eps) / (w + eps));
            lg.add("ηA((1+ε)C_R,α,σ−ε,σ)(log τ)^{2(1−σ+ε)}/loglogτ", e * main / ll)
                .add("(e^α+1)/(4α)(log τ)^{2−2σ}/loglogτ", (ea + 1.0) / (4.0 * alpha) * tau.pow(2.0 * w) / ll)
                .add("−(1+ε)C_Rη/((1−σ+ε)loglogτ)", -a * e / ((w + eps) * ll))
                .add("C_R log(2 loglogτ)", c_r * (2.0 * ll).ln());
            sym_ld = &["O(A₁(σ,τ))", "O(A₂(σ,τ))"];
            sym_lg = &["O(A₁(σ,τ))", "O(A₃(σ,τ))"];
        }
        AsymptoticTheorem::Thm2 | AsymptoticTheorem::Thm3 => {
            let mf = if inputs.first_moment {
                m_functions_first_moment(inputs.c_p1, inputs.c_p2, ll)?
            } else {
                m_functions_mean_square(inputs.c_p1, inputs.c_p2, ll)?
            };
            let m1 = mf.m1;
            if which == AsymptoticTheorem::Thm2 {
                if !(sigma > 0.5 && sigma < 1.0) {
                    return Err(fail(format!("σ = {sigma} in (1/2, 1)")));
                }
                ld.add("Â(m₁,α,σ)(log τ)^{2−2σ}", a_hat(m1, alpha, sigma)? * tau.pow(2.0 * w))
                    .add("−m₁σ2^{1−σ}/(1−σ)", -m1 * sigma * 2f64.powf(w) / w);
                lg.add("Ã(m₁,α,σ,τ)(log τ)^{2−2σ}/loglogτ", a_tilde(m1, alpha, sigma, ll)? * tau.pow(2.0 * w) / ll)
                    .add("−m₁η/((1−σ)loglogτ)", -m1 * eta(alpha, sigma, ll)? / (w * ll))
                    .add("m₁ log(2 loglogτ)", m1 * (2.0 * ll).ln());
                sym_ld = &["O(A₄(σ,τ))"];
                sym_lg = &["O(A₅(σ,τ))"];
            } else {
                if sigma != 1.0 {
                    return Err(fail(format!("σ = {sigma} equals 1")));
                }
                ld.add("2m₁ loglogτ", 2.0 * m1 * ll);
                lg.add("m₁(log(2 loglogτ) + 2)", m1 * ((2.0 * ll).ln() + 2.0));
                sym_ld = &["O(m₃(τ) loglogτ)", "O(1)"];
                sym_lg = &["O(m₃(τ))", "O(1/loglogτ)"];
            }
        }
        AsymptoticTheorem::Thm4 | AsymptoticTheorem::Thm5 | AsymptoticTheorem::Thm6 => {
            require_strong_lambda(desc)?;
            let m = desc.m()?;
            if which == AsymptoticTheorem::Thm6 {
                if sigma != 1.0 {
                    return Err(fail(format!("σ = {sigma} equals 1")));
                }
                ld.add("2m loglogτ", 2.0 * m * ll)
                    .add("−m(γ+α)", -m * (EULER_GAMMA + alpha))
                    .add("(e^α+1)/(2α)", (ea + 1.0) / (2.0 * alpha));
                lg.add("m log(2 loglogτ)", m * (2.0 * ll).ln())
                    .add("mγ", m * EULER_GAMMA)
                    .add("(e^α+1)/(4α loglogτ)", (ea + 1.0) / (4.0 * alpha * ll));
                sym_ld = &["O((loglogτ)²/log τ)"];
                sym_lg = &["O(loglogτ/log τ)"];
            } else {
                if !(alpha < 2.0) {
                    return Err(fail(format!("α = {alpha} in [log 2, 2)")));
                }
                let strip = le((0.75 - sigma).abs(), 0.25 - 1.0 / ll) && sigma < 1.0;
                let near = le(w.abs() * ll, 1.0);
                if strip {
                    ld.add("Â(m,α,σ)(log τ)^{2−2σ}", a_hat(m, alpha, sigma)? * tau.pow(2.0 * w));
                    lg.add("Ã(m,α,σ,τ)(log τ)^{2−2σ}/loglogτ", a_tilde(m, alpha, sigma, ll)? * tau.pow(2.0 * w) / ll);
                    if which == AsymptoticTheorem::Thm4 {
                        ld.add("−mσ2^{1−σ}/(1−σ)", -m * sigma * 2f64.powf(w) / w);
                        lg.add("−mη/((1−σ)loglogτ)", -m * eta(alpha, sigma, ll)? / (w * ll))
                            .add("m log(2 loglogτ)", m * (2.0 * ll).ln());
                        sym_ld = &["O((log τ)^{3−4σ})", "O(1/(2σ−1)³)", "O((loglogτ)²/((2σ−1)(log τ)^{2σ−1}))"];
                        sym_lg = &["O((log τ)^{2−2σ}/((1−σ)²(loglogτ)²))", "O(1/(2σ−1)²)"];
                    } else {
                        sym_ld = &["O(1/(1−σ))", "O((log τ)^{3−4σ})", "O(1/(2σ−1)³)"];
                        sym_lg = &["O(1/((1−σ)loglogτ))", "O(log loglogτ)", "O(1/(2σ−1)²)"];
                    }
                } else if which == AsymptoticTheorem::Thm4 && near {
                    ld.add("2m loglogτ", 2.0 * m * ll);
                    lg.add("m log(2 loglogτ)", m * (2.0 * ll).ln());
                    sym_ld = &["O(1)"];
                    sym_lg = &["O(1)"];
                } else {
                    return Err(fail(format!(
                        "σ = {sigma} in |3/4 − σ| ≤ 1/4 − 1/loglogτ{}",
                        if which == AsymptoticTheorem::Thm4 { " or |1 − σ| loglogτ ≤ 1" } else { "" }
                    )));
                }
            }
        }
    }
    let tag = which.tag();
    let mut a = ld.finish(Target::LogDeriv, tag, &ch);
    let mut b = lg.finish(Target::LogL, tag, &ch);
    a.symbolic_terms = sym_ld.iter().map(|s| s.to_string()).collect();
    b.symbolic_terms = sym_lg.iter().map(|s| s.to_string()).collect();
    Ok((a, b))
}
