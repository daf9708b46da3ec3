//! The explicit bounds in the three σ-regimes, on the 1-line and at `s = 1`.

use super::prime::{s_shared_tail, shat_shared_tail};
use super::{
    conductor_ratio, ge, le, require_strong_lambda, standard_assumptions, t0_conditions, BoundParameters,
    BoundResult, CaseTag, Checks, Target, Tau, Terms,
};
use crate::consts::{EULER_GAMMA, LN_2, PI, TRIGAMMA_COEFF};
use crate::error::{Error, Result};
use crate::kernel::{a_hat, a_tilde, big_m, eta, frak_a, frak_b, frak_b_real_point, integral_theta1, theta1, theta2};
use crate::selberg::{EvaluationPoint, LFunctionDescriptor};

struct Ctx {
    m: f64,
    m_l: f64,
    d: f64,
    tau: Tau,
    ratio: f64,
}

impl Ctx {
    fn new(desc: &LFunctionDescriptor, point: &EvaluationPoint) -> Result<Self> {
        require_strong_lambda(desc)?;
        Ok(Self {
            m: desc.m()?,
            m_l: desc.pole_order as f64,
            d: desc.degree,
            tau: Tau::of(point),
            ratio: conductor_ratio(desc, point.log_tau),
        })
    }
}

fn in_range1(sigma: f64, p: &BoundParameters, ll: f64) -> bool {
    ge(sigma, 0.5 + p.alpha1 / ll) && sigma < 1.0
}

fn in_range2(sigma: f64, p: &BoundParameters, ll: f64) -> bool {
    ge(sigma, 1.0 - p.alpha2 / ll) && le(sigma, 1.0 + p.alpha3 / ll)
}

fn in_range3(sigma: f64, p: &BoundParameters, ll: f64) -> bool {
    ge(sigma, 1.0 + p.alpha3 / ll)
}

fn case1(desc: &LFunctionDescriptor, point: &EvaluationPoint, p: &BoundParameters) -> Result<(BoundResult, BoundResult)> {
    let c = Ctx::new(desc, point)?;
    let (sigma, alpha, alpha1) = (point.sigma, p.alpha, p.alpha1);
    let tau = c.tau;
    let ll0 = p.log_log_tau0.unwrap_or(tau.ll);
    let l0 = ll0.exp();
    let mut ch = Checks::default();
    standard_assumptions(&mut ch);
    ch.check(format!("α = {alpha} ≥ log 2"), alpha >= LN_2)
        .check(format!("2α₁ = {} > α = {alpha}", 2.0 * alpha1), 2.0 * alpha1 > alpha)
        .check(format!("σ = {sigma} in [1/2 + α₁/loglogτ, 1) = [{}, 1)", 0.5 + alpha1 / tau.ll), in_range1(sigma, p, tau.ll))
        .check(format!("τ ≥ τ₀ (loglogτ = {} ≥ loglogτ₀ = {ll0})", tau.ll), ge(tau.ll, ll0))
        .check(format!("τ₀ > e^√60 (log τ₀ = {l0})"), l0 > 60f64.sqrt())
        .check("τ₀ > exp(2^{1/(2−α/α₁)})", l0 > 2f64.powf(1.0 / (2.0 - alpha / alpha1)))
        .check(format!("τ₀ > exp(e^{{2α₁}}) (loglogτ₀ = {ll0} > {})", 2.0 * alpha1), ll0 > 2.0 * alpha1)
        .check("ν₁ > 0 and ν₂ > 1", p.nu1 > 0.0 && p.nu2 > 1.0);
    let t0 = t0_conditions(&mut ch, desc, point, p.t0, 1.0);
    if !(sigma > 0.5 && sigma < 1.0) || (2.0 * sigma - 1.0) * tau.ll <= alpha {
        return Err(Error::NoCaseApplies(sigma));
    }

    let (m, m_l, d) = (c.m, c.m_l, c.d);
    let w = 1.0 - sigma;
    let s = 2.0 * sigma - 1.0;
    let ea = alpha.exp();
    let fa = frak_a(m_l, alpha1, t0)?;
    let fb = frak_b(d, m, m_l, alpha1, t0, l0)?;
    let e = eta(alpha, sigma, tau.ll)?;
    let (arch, mix) = s_shared_tail(sigma, alpha, tau);
    let kappa = 2.0 - alpha / alpha1;

    let mut ld = Terms::default();
    ld.add("main Â(m,α,σ)(log τ)^{2−2σ}", a_hat(m, alpha, sigma)? * tau.pow(2.0 * w))
        .add("−mσ2^{1−σ}/(1−σ)", -m * sigma * 2f64.powf(w) / w)
        .add("zero sum 𝔞 term", fa * (ea + 1.0) / alpha * tau.pow(3.0 - 4.0 * sigma))
        .add("prime archimedean constant", m * arch)
        .add("prime (loglogτ)² term", m * mix)
        .add("zero sum loglogτ term", 2.0 * m * (ea + 1.0) / alpha * tau.ll / tau.pow(s))
        .add("zero sum 𝔟 term", fb * (ea + 1.0) / (alpha * tau.pow(s)))
        .add(
            "R₁ trivial zeros",
            TRIGAMMA_COEFF * d * (sigma - 0.5) * (1.0 + (-(alpha / alpha1) * sigma * ll0).exp())
                / (alpha * tau.pow(kappa * sigma)),
        )
        .add("R₂ pole", m_l / alpha * c.ratio * tau.pow(2.0 * w));

    let mut lg = Terms::default();
    lg.add("main Ã(m,α,σ,τ)(log τ)^{2−2σ}/loglogτ", a_tilde(m, alpha, sigma, tau.ll)? * tau.pow(2.0 * w) / tau.ll)
        .add("−mη/((1−σ)loglogτ)", -m * e / (w * tau.ll))
        .add("m log(2 loglogτ)", m * (2.0 * tau.ll).ln())
        .add(
            "ν₂ term",
            m * (p.nu2 * e).powi(2) * (-2.0 * alpha * w / s).exp() * tau.pow(2.0 * w) / (w * w * tau.ll.powi(2)),
        )
        .add("zero sum 𝔞 term", fa * (ea + 1.0) * tau.pow(3.0 - 4.0 * sigma) / (4.0 * alpha * tau.ll));
    let (harch, hmix) = shat_shared_tail(sigma, alpha, tau);
    lg.add("prime archimedean constant", m * harch)
        .add(
            "ν₁ term",
            m / (p.nu1 * p.nu1) * (-2.0 * alpha * w / (s * p.nu2)).exp() * tau.pow(2.0 * w / p.nu2),
        )
        .add(
            "prime constants with ∫θ₁",
            m * ((1.0 - sigma * 2f64.powf(w)) / (w * LN_2) - LN_2.ln() + integral_theta1(p.nu1)?),
        )
        .add("prime loglogτ term", m * hmix)
        .add("zero sum m term", m * (ea + 1.0) / (alpha * tau.pow(s)))
        .add("zero sum max{0,𝔟} term", fb.max(0.0) * (ea + 1.0) / (2.0 * alpha * tau.pow(s) * tau.ll))
        .add("E_x first", 2.0 * m * e * (alpha / s).exp() / (tau.l * tau.ll))
        .add("E_x second", 5.0 * m * (2.0 * alpha / s).exp() * (1.0 + tau.ll / e) / (16.0 * PI * tau.l * tau.l))
        .add(
            "∫R₁",
            TRIGAMMA_COEFF * d * alpha1 * (1.0 + (-(alpha / (2.0 * alpha1)) * ll0).exp())
                / (alpha * (2.0 * alpha1 - alpha) * tau.pow(kappa * sigma) * tau.ll),
        )
        .add("∫R₂", m_l * (1.0 + (alpha / 2.0).exp()) / (2.0 * alpha) * c.ratio * tau.pow(2.0 * w) / tau.ll);
    Ok((ld.finish(Target::LogDeriv, CaseTag::Case1, &ch), lg.finish(Target::LogL, CaseTag::Case1, &ch)))
}

fn case2(desc: &LFunctionDescriptor, point: &EvaluationPoint, p: &BoundParameters) -> Result<(BoundResult, BoundResult)> {
    let c = Ctx::new(desc, point)?;
    let (sigma, alpha, a2, a3) = (point.sigma, p.alpha, p.alpha2, p.alpha3);
    let tau = c.tau;
    let ll0 = p.log_log_tau0.unwrap_or(tau.ll);
    let l0 = ll0.exp();
    let s = 2.0 * sigma - 1.0;
    let mut ch = Checks::default();
    standard_assumptions(&mut ch);
    ch.check(format!("α = {alpha} ≥ log 2"), alpha >= LN_2)
        .check("α₂ > 0 and α₃ > 0", a2 > 0.0 && a3 > 0.0)
        .check(
            format!("σ = {sigma} in [1 − α₂/loglogτ, 1 + α₃/loglogτ]"),
            in_range2(sigma, p, tau.ll),
        )
        .check(format!("τ ≥ τ₀ (loglogτ = {} ≥ loglogτ₀ = {ll0})", tau.ll), ge(tau.ll, ll0))
        .check("τ₀ > e^√60", l0 > 60f64.sqrt())
        .check("τ₀ > exp(√2 exp(α/(2σ−1)))", l0 > 2f64.sqrt() * (alpha / s).exp())
        .check("τ₀ > exp(e^{α+2α₂})", ll0 > alpha + 2.0 * a2)
        .check("τ₀ > exp(e^{4α₂})", ll0 > 4.0 * a2)
        .check("τ₀ > exp(e^{2α₃})", ll0 > 2.0 * a3);
    let t0 = t0_conditions(&mut ch, desc, point, p.t0, 1.0);
    if !(sigma > 0.5) || !(ll0 > alpha + 2.0 * a2) {
        return Err(Error::PreconditionFailed("case 2 needs loglogτ₀ > α + 2α₂".into()));
    }

    let (m, m_l, d) = (c.m, c.m_l, c.d);
    let w = (1.0 - sigma).abs();
    let ea = alpha.exp();
    let mm = big_m(a2, a3);
    let alpha1 = 0.5 * ll0 - a2;
    let fa = frak_a(m_l, alpha1, t0)?;
    let fb = frak_b(d, m, m_l, alpha1, t0, l0)?;
    let th_m = theta1(mm)?;
    let th_small = theta1(mm * LN_2 / (2.0 * ll0))?;
    let (arch, mix) = s_shared_tail(sigma, alpha, tau);
    let big_exp = (2.0 * alpha * (ll0 - a2) / (ll0 - 2.0 * a2)).exp();
    let shift = 1.0 - alpha / (ll0 - 2.0 * a2);

    let mut ld = Terms::default();
    ld.add("2m loglogτ", 2.0 * m * tau.ll)
        .add("m(1 − σ log 2)", m * (1.0 - sigma * LN_2))
        .add("(e^α+1)/(2α)", (ea + 1.0) / (2.0 * alpha))
        .add(
            "|1−σ|(loglogτ)² term",
            (4.0 * m * th_m + (ea + 1.0) * theta2(mm)? / (alpha * ll0) + m * sigma * LN_2 * LN_2 * th_small / (ll0 * ll0))
                * w
                * tau.ll.powi(2),
        )
        .add("prime archimedean constant", m * arch)
        .add("prime (loglogτ)² term", m * mix)
        .add("zero sum loglogτ term", 2.0 * m * (ea + 1.0) / alpha * tau.ll / tau.pow(s))
        .add("zero sum 𝔞₁, 𝔟₁ terms", (ea + 1.0) / alpha * (fa / tau.pow(4.0 * sigma - 3.0) + fb / tau.pow(s)))
        .add(
            "R₁ trivial zeros",
            TRIGAMMA_COEFF * d * (2.0 * a2).exp() * (0.5 + a3 / ll0) * (1.0 + big_exp) / (alpha * tau.l * tau.l),
        )
        .add(
            "R₂ pole",
            m_l * (2.0 * a2).exp() / alpha
                * (0.5 + a3 / ll0)
                * (1.0 + (2.0 * alpha * a3 / (ll0 + 2.0 * a3)).exp())
                * c.ratio,
        );

    let (harch, hmix) = shat_shared_tail(sigma, alpha, tau);
    let mut lg = Terms::default();
    lg.add("m log(2 loglogτ)", m * (2.0 * tau.ll).ln())
        .add("m constants", m * (1.0 / LN_2 - LN_2.ln() - sigma + 1.0 / shift))
        .add(
            "|1−σ| loglogτ term",
            (2.0 * m * th_m / shift + 2.0 * m * theta1(2.0 * a2)? + m * sigma * LN_2 * th_small / ll0) * w * tau.ll,
        )
        .add("prime archimedean constant", m * harch)
        .add("prime loglogτ term", m * hmix)
        .add("zero sum main", (ea + 1.0) * tau.pow(2.0 - 2.0 * sigma) / (4.0 * alpha * tau.ll))
        .add(
            "zero sum 𝔞₁, max{0,𝔟₁} terms",
            (ea + 1.0) / (4.0 * alpha * tau.ll) * (fa / tau.pow(4.0 * sigma - 3.0) + 2.0 * fb.max(0.0) / tau.pow(s)),
        )
        .add("zero sum m term", m * (ea + 1.0) / (alpha * tau.pow(s)))
        .add("E_x first", m * (alpha * ll0 / (ll0 - 2.0 * a2)).exp() / (shift * tau.l * tau.ll))
        .add(
            "E_x second",
            5.0 * m * (2.0 * alpha * ll0 / (ll0 - 2.0 * a2)).exp() * (1.0 + 2.0 * tau.ll) / (16.0 * PI * tau.l * tau.l),
        )
        .add("∫R₁", TRIGAMMA_COEFF * d * (1.0 + big_exp) / (2.0 * alpha * tau.pow(2.0 * sigma) * tau.ll))
        .add("∫R₂", m_l * (2.0 * a2).exp() * (1.0 + (alpha / 2.0).exp()) / (2.0 * alpha * tau.ll) * c.ratio);
    Ok((ld.finish(Target::LogDeriv, CaseTag::Case2, &ch), lg.finish(Target::LogL, CaseTag::Case2, &ch)))
}

fn case3(desc: &LFunctionDescriptor, point: &EvaluationPoint, p: &BoundParameters) -> Result<(BoundResult, BoundResult)> {
    let m = desc.m()?;
    let tau = Tau::of(point);
    let a3 = p.alpha3;
    let mut ch = Checks::default();
    ch.assume("GRH for L");
    ch.check("α₃ > 0", a3 > 0.0)
        .check("τ > e", tau.l > 1.0)
        .check(format!("σ = {} ≥ 1 + α₃/loglogτ", point.sigma), in_range3(point.sigma, p, tau.ll));
    if !(a3 > 0.0 && tau.ll > 0.0) {
        return Err(Error::PreconditionFailed("case 3 needs α₃ > 0 and τ > e".into()));
    }
    let mut ld = Terms::default();
    ld.add("(m/α₃) loglogτ", m / a3 * tau.ll);
    let mut lg = Terms::default();
    lg.add("m log(loglogτ/α₃)", m * (tau.ll / a3).ln()).add("mγα₃/loglogτ", m * EULER_GAMMA * a3 / tau.ll);
    Ok((ld.finish(Target::LogDeriv, CaseTag::Case3, &ch), lg.finish(Target::LogL, CaseTag::Case3, &ch)))
}

/// Evaluates one named regime regardless of which range the point sits in.
pub fn bound_case(
    desc: &LFunctionDescriptor,
    point: &EvaluationPoint,
    params: &BoundParameters,
    case: CaseTag,
) -> Result<(BoundResult, BoundResult)> {
    match case {
        CaseTag::Case1 => case1(desc, point, params),
        CaseTag::Case2 => case2(desc, point, params),
        CaseTag::Case3 => case3(desc, point, params),
        CaseTag::Line1 => bound_line1(desc, point, params),
        other => Err(Error::PreconditionFailed(format!("case {other} is not a main-theorem regime"))),
    }
}

/// Picks the regime from the σ-ranges (or `params.case_hint`). Where
/// several apply, each target keeps the smallest of the certified values,
/// falling back to uncertified ones.
pub fn bound_main(
    desc: &LFunctionDescriptor,
    point: &EvaluationPoint,
    params: &BoundParameters,
) -> Result<(BoundResult, BoundResult)> {
    if let Some(h) = params.case_hint {
        return bound_case(desc, point, params, h);
    }
    let (sigma, ll) = (point.sigma, point.log_log_tau);
    let mut results = Vec::new();
    let mut last_err = None;
    for (applies, case) in [
        (in_range1(sigma, params, ll), CaseTag::Case1),
        (in_range2(sigma, params, ll), CaseTag::Case2),
        (in_range3(sigma, params, ll), CaseTag::Case3),
    ] {
        if applies {
            match bound_case(desc, point, params, case) {
                Ok(r) => results.push(r),
                Err(e @ (Error::StrongLambdaRequired | Error::MissingEulerOrder)) => return Err(e),
                Err(e) => last_err = Some(e),
            }
        }
    }
    if results.is_empty() {
        return Err(last_err.unwrap_or(Error::NoCaseApplies(sigma)));
    }
    let pick = |sel: fn(&(BoundResult, BoundResult)) -> &BoundResult| -> BoundResult {
        let best = |certified: bool| {
            results
                .iter()
                .map(sel)
                .filter(|r| r.certified == certified)
                .min_by(|a, b| a.value.total_cmp(&b.value))
                .cloned()
        };
        best(true).or_else(|| best(false)).expect("nonempty")
    };
    Ok((pick(|r| &r.0), pick(|r| &r.1)))
}

struct Line1Inputs {
    m: f64,
    m_l: f64,
    d: f64,
    tau: Tau,
    ll0: f64,
    fa: f64,
    fb: f64,
    ratio: f64,
}

fn line1_terms(x: &Line1Inputs, alpha: f64, case_tag: CaseTag, ch: &Checks) -> Result<(BoundResult, BoundResult)> {
    let Line1Inputs { m, m_l, d, tau, ll0, fa, fb, ratio } = *x;
    let ea = alpha.exp();
    let (l, ll) = (tau.l, tau.ll);
    let mut ld = Terms::default();
    ld.add("2m loglogτ", 2.0 * m * ll)
        .add("−m(γ+α)", -m * (EULER_GAMMA + alpha))
        .add("(e^α+1)/(2α)", (ea + 1.0) / (2.0 * alpha))
        .add("(loglogτ)²/log τ term", m * alpha.exp_m1() * (2.0 * alpha + 1.0) / (2.0 * PI * alpha) * ll * ll / l)
        .add("loglogτ/log τ term", 2.0 * m * (ea + 1.0) / alpha * ll / l)
        .add("1/log τ term", (0.24 * m * ea + (ea + 1.0) * (fa + fb) / alpha) / l)
        .add("R₁ trivial zeros", 2.15 * d * ((2.0 * alpha).exp() + 1.0) / (alpha * l * l));
    if case_tag != CaseTag::RealPoint {
        ld.add("R₂ pole", m_l / alpha * ratio);
    }
    let mut lg = Terms::default();
    lg.add("m log(2 loglogτ)", m * (2.0 * ll).ln())
        .add("mγ", m * EULER_GAMMA)
        .add("(e^α+1)/(4α loglogτ)", (ea + 1.0) / (4.0 * alpha * ll))
        .add("loglogτ/log τ term", m * (1.0 + ea * (4.0 * alpha - 1.0)) / (4.0 * PI * alpha) * ll / l)
        .add(
            "1/log τ term",
            m / alpha * (ea + 1.0 + (ea * (7.0 * alpha - 4.0 * (alpha * alpha + 1.0)) + 4.0) / (4.0 * PI)) / l,
        )
        .add(
            "1/(log τ loglogτ) term",
            ((ea + 1.0) * (fa + 2.0 * fb.max(0.0)) / (4.0 * alpha) + m * ea * ll0 / (ll0 - alpha)) / (l * ll),
        )
        .add("E_x loglogτ term", 5.0 * m * (2.0 * alpha).exp() * ll / (8.0 * PI * l * l))
        .add("E_x constant term", 5.0 * m * (2.0 * alpha).exp() * (1.0 - 2.0 * alpha) / (16.0 * PI * l * l))
        .add("∫R₁", 2.15 * d * ((2.0 * alpha).exp() + 1.0) / (alpha * l * l * ll));
    if case_tag != CaseTag::RealPoint {
        lg.add("∫R₂", m_l * (1.0 + (alpha / 2.0).exp()) / (2.0 * alpha * ll) * ratio);
    }
    Ok((ld.finish(Target::LogDeriv, case_tag, ch), lg.finish(Target::LogL, case_tag, ch)))
}

/// Bounds on the 1-line; `point.sigma` must be 1.
pub fn bound_line1(
    desc: &LFunctionDescriptor,
    point: &EvaluationPoint,
    params: &BoundParameters,
) -> Result<(BoundResult, BoundResult)> {
    let c = Ctx::new(desc, point)?;
    let alpha = params.alpha;
    let tau = c.tau;
    let ll0 = params.log_log_tau0.unwrap_or(tau.ll);
    let l0 = ll0.exp();
    let mut ch = Checks::default();
    standard_assumptions(&mut ch);
    ch.check(format!("σ = {} equals 1", point.sigma), point.sigma == 1.0)
        .check(format!("α = {alpha} ≥ log 2"), alpha >= LN_2)
        .check(format!("τ ≥ τ₀ (loglogτ = {} ≥ loglogτ₀ = {ll0})", tau.ll), ge(tau.ll, ll0))
        .check(format!("τ₀ ≥ exp(e^α √60) (log τ₀ = {l0})"), ge(l0, alpha.exp() * 60f64.sqrt()));
    let t0 = t0_conditions(&mut ch, desc, point, params.t0, 1.0);
    if !(ll0 > alpha) {
        return Err(Error::PreconditionFailed(format!("loglogτ₀ = {ll0} must exceed α = {alpha}")));
    }
    let fa = frak_a(c.m_l, 0.5 * ll0, t0)?;
    let fb = frak_b(c.d, c.m, c.m_l, 0.5 * ll0, t0, l0)?;
    let x = Line1Inputs { m: c.m, m_l: c.m_l, d: c.d, tau, ll0, fa, fb, ratio: c.ratio };
    line1_terms(&x, alpha, CaseTag::Line1, &ch)
}

/// The `s = 1` bounds of an entire L-function, with τ replaced by `q_L`.
/// `params.log_log_tau0` plays the role of `loglog q₀` (default `q₀ = q_L`).
pub fn bound_real_point(desc: &LFunctionDescriptor, params: &BoundParameters) -> Result<(BoundResult, BoundResult)> {
    require_strong_lambda(desc)?;
    if desc.pole_order != 0 {
        return Err(Error::NotEntire(desc.pole_order));
    }
    let m = desc.m()?;
    let alpha = params.alpha;
    let log_q = desc.log_conductor;
    if !(log_q > 1.0) || log_q < alpha.exp() * 60f64.sqrt() {
        return Err(Error::ConductorTooSmall(log_q));
    }
    let tau = Tau { l: log_q, ll: log_q.ln() };
    let ll0 = params.log_log_tau0.unwrap_or(tau.ll);
    let l0 = ll0.exp();
    if l0 < alpha.exp() * 60f64.sqrt() {
        return Err(Error::ConductorTooSmall(l0));
    }
    let mut ch = Checks::default();
    standard_assumptions(&mut ch);
    ch.check(format!("α = {alpha} ≥ log 2"), alpha >= LN_2)
        .check(format!("q ≥ q₀ (loglog q = {} ≥ {ll0})", tau.ll), ge(tau.ll, ll0));
    let fa = frak_a(0.0, 0.5 * ll0, 1.0)?;
    let fb = frak_b_real_point(desc.degree, m, l0, desc.mu_plus())?;
    let x = Line1Inputs { m, m_l: 0.0, d: desc.degree, tau, ll0, fa, fb, ratio: 0.0 };
    line1_terms(&x, alpha, CaseTag::RealPoint, &ch)
}
