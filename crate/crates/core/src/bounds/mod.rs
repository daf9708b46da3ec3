//! Explicit upper bounds for `|L'/L(s)|` and `|log L(s)|` with term
//! breakdowns and checked side conditions.

mod asymptotic;
mod corollary;
mod explicit;
mod prime;
mod zeros;

pub use asymptotic::{asymptotic_main_terms, AsymptoticInputs, AsymptoticTheorem};
pub use corollary::{dedekind_residue_bound, family_cor10, zeta_cor9, Cor10Bounds, COR10_LOG_LOG_TAU0};
pub use explicit::{bound_case, bound_line1, bound_main, bound_real_point};
pub use prime::{prime_term_bound, PrimeTerm};
pub use zeros::{r_terms, zero_sum_bound, zero_sum_bound_real_point};

use crate::error::{Error, Result};
use crate::selberg::{EvaluationPoint, LFunctionDescriptor};
use serde::{Deserialize, Serialize};

/// Slack for closed range checks written against rounded inputs such as `0.5 + 1.3/13`.
pub(crate) const RANGE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Target {
    LogDeriv,
    #[serde(rename = "logL")]
    LogL,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum CaseTag {
    Case1,
    Case2,
    Case3,
    Line1,
    RealPoint,
    Cor9,
    Cor10,
    Cor10Line1,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
        f.write_str(&s)
    }
}

/// Tunable parameters. `log_log_tau0` and `t0` default to the point itself
/// (`τ₀ = τ`, `t₀ = |t|`) when left unset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundParameters {
    pub alpha: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub nu1: f64,
    pub nu2: f64,
    pub log_log_tau0: Option<f64>,
    pub t0: Option<f64>,
    pub case_hint: Option<CaseTag>,
}

impl Default for BoundParameters {
    fn default() -> Self {
        Self {
            alpha: 1.278,
            alpha1: 1.3,
            alpha2: 1.0,
            alpha3: 1.0,
            nu1: 3.378,
            nu2: 1.182,
            log_log_tau0: None,
            t0: None,
            case_hint: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub label: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Precondition {
    pub text: String,
    pub pass: bool,
}

/// One evaluated bound. `value` is the sum of `terms`; `certified` is the
/// conjunction of the numeric preconditions. Unverifiable hypotheses are
/// listed in `assumptions`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundResult {
    pub target: Target,
    #[serde(rename = "case")]
    pub case_tag: CaseTag,
    pub value: f64,
    pub certified: bool,
    pub terms: Vec<Term>,
    pub preconditions: Vec<Precondition>,
    #[serde(default)]
    pub assumptions: Vec<String>,
    /// Names of the unevaluated O-terms of the asymptotic statements.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub symbolic_terms: Vec<String>,
}

impl BoundResult {
    /// Errors with the first failing condition when not certified.
    pub fn require(self) -> Result<Self> {
        match self.preconditions.iter().find(|p| !p.pass) {
            Some(p) => Err(Error::PreconditionFailed(p.text.clone())),
            None => Ok(self),
        }
    }

    pub fn failed_conditions(&self) -> Vec<&str> {
        self.preconditions.iter().filter(|p| !p.pass).map(|p| p.text.as_str()).collect()
    }

    pub fn term(&self, label: &str) -> Option<f64> {
        self.terms.iter().find(|t| t.label == label).map(|t| t.value)
    }
}

/// Numeric side conditions collected while assembling a bound.
#[derive(Debug, Clone, Default)]
pub(crate) struct Checks {
    list: Vec<Precondition>,
    assumptions: Vec<String>,
}

impl Checks {
    pub fn check(&mut self, text: impl Into<String>, pass: bool) -> &mut Self {
        self.list.push(Precondition { text: text.into(), pass });
        self
    }

    pub fn assume(&mut self, text: impl Into<String>) -> &mut Self {
        self.assumptions.push(text.into());
        self
    }

    pub fn all_pass(&self) -> bool {
        self.list.iter().all(|p| p.pass)
    }

}

/// Ordered labeled summands.
#[derive(Debug, Clone, Default)]
pub(crate) struct Terms(Vec<Term>);

impl Terms {
    pub fn add(&mut self, label: &str, value: f64) -> &mut Self {
        self.0.push(Term { label: label.to_owned(), value });
        self
    }

    pub fn finish(self, target: Target, case_tag: CaseTag, checks: &Checks) -> BoundResult {
        let value = self.0.iter().map(|t| t.value).sum();
        BoundResult {
            target,
            case_tag,
            value,
            certified: checks.all_pass(),
            terms: self.0,
            preconditions: checks.list.clone(),
            assumptions: checks.assumptions.clone(),
            symbolic_terms: Vec::new(),
        }
    }
}

/// Log-coordinate view of τ: `L = log τ`, `LL = log log τ`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Tau {
    pub l: f64,
    pub ll: f64,
}

impl Tau {
    pub fn of(point: &EvaluationPoint) -> Self {
        Self { l: point.log_tau, ll: point.log_log_tau }
    }

    /// `(log τ)^k`, formed as `exp(k·LL)`.
    pub fn pow(&self, k: f64) -> f64 {
        (k * self.ll).exp()
    }
}

/// `(q_L/τ)^{2/d}`.
pub(crate) fn conductor_ratio(desc: &LFunctionDescriptor, log_tau: f64) -> f64 {
    ((2.0 / desc.degree) * (desc.log_conductor - log_tau)).exp()
}

pub(crate) fn require_strong_lambda(desc: &LFunctionDescriptor) -> Result<()> {
    if desc.strong_lambda {
        Ok(())
    } else {
        Err(Error::StrongLambdaRequired)
    }
}

/// Records `|t| ≥ t₀ ≥ max{2μ⁺, 1}` and returns the `t₀` in use.
pub(crate) fn t0_conditions(
    checks: &mut Checks,
    desc: &LFunctionDescriptor,
    point: &EvaluationPoint,
    t0: Option<f64>,
    floor: f64,
) -> f64 {
    let floor = floor.max(2.0 * desc.mu_plus()).max(1.0);
    let t0 = t0.or(point.t.map(f64::abs)).unwrap_or(floor);
    checks.check(format!("t0 = {t0} ≥ max{{2μ⁺, ...}} = {floor}"), t0 >= floor);
    match point.t {
        Some(t) => {
            checks.check(format!("|t| = {} ≥ t0 = {t0}", t.abs()), t.abs() >= t0);
        }
        None => {
            checks.assume(format!("|t| ≥ t0 = {t0} (t not representable at this τ)"));
        }
    }
    t0
}

pub(crate) fn standard_assumptions(checks: &mut Checks) {
    checks.assume("GRH for L").assume("RH for zeta").assume("strong λ-conjecture");
}

pub(crate) fn ge(a: f64, b: f64) -> bool {
    a >= b - RANGE_SLACK * b.abs().max(1.0)
}

pub(crate) fn le(a: f64, b: f64) -> bool {
    a <= b + RANGE_SLACK * b.abs().max(1.0)
}
