//! L-function descriptors, built-in instances and evaluation points.

use crate::character::DirichletCharacter;
use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

/// One factor `Γ(λ s + μ)` of the functional equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaFactor {
    pub lambda: f64,
    pub mu: Complex64,
}

impl GammaFactor {
    pub fn new(lambda: f64, mu: Complex64) -> Self {
        Self { lambda, mu }
    }
}

/// Source of the Dirichlet coefficients of an L-function at prime powers.
pub trait CoefficientProvider: Send + Sync + fmt::Debug {
    /// `Λ_L(p^k)` for a prime `p` and `k ≥ 1`.
    fn lambda_prime_power(&self, p: u64, k: u32) -> Complex64;
    /// `a(p)`.
    fn a_p(&self, p: u64) -> Complex64;
}

/// Product of Dirichlet L-functions (ζ is the character mod 1). The local
/// roots at `p` are the character values `χ_j(p)`.
#[derive(Debug, Clone)]
pub struct CharacterProduct {
    pub characters: Vec<DirichletCharacter>,
}

impl CoefficientProvider for CharacterProduct {
    fn lambda_prime_power(&self, p: u64, k: u32) -> Complex64 {
        let lp = (p as f64).ln();
        self.characters.iter().map(|c| c.value(p).powu(k)).sum::<Complex64>() * lp
    }

    fn a_p(&self, p: u64) -> Complex64 {
        self.characters.iter().map(|c| c.value(p)).sum()
    }
}

/// Built-in L-functions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Builtin {
    Zeta,
    Dirichlet { modulus: u64, index: u64 },
    Product(Vec<Builtin>),
}

impl Builtin {
    /// Parses `zeta`, `dirichlet(q,n)` and `product(A,B,...)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownBuiltin(s.to_string());
        if s.eq_ignore_ascii_case("zeta") {
            return Ok(Builtin::Zeta);
        }
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        match head.trim().to_ascii_lowercase().as_str() {
            "dirichlet" => {
                let (q, n) = inner.split_once(',').ok_or_else(bad)?;
                let modulus = q.trim().parse().map_err(|_| bad())?;
                let index = n.trim().parse().map_err(|_| bad())?;
                Ok(Builtin::Dirichlet { modulus, index })
            }
            "product" => {
                let mut parts = Vec::new();
                let mut depth = 0;
                let mut start = 0;
                for (i, ch) in inner.char_indices() {
                    match ch {
                        '(' => depth += 1,
                        ')' => depth -= 1,
                        ',' if depth == 0 => {
                            parts.push(Builtin::parse(&inner[start..i])?);
                            start = i + 1;
                        }
                        _ => {}
                    }
                }
                parts.push(Builtin::parse(&inner[start..])?);
                Ok(Builtin::Product(parts))
            }
            _ => Err(bad()),
        }
    }

    fn flatten(&self, out: &mut Vec<Builtin>) {
        match self {
            Builtin::Product(v) => v.iter().for_each(|b| b.flatten(out)),
            other => out.push(other.clone()),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Zeta => write!(f, "zeta"),
            Builtin::Dirichlet { modulus, index } => write!(f, "dirichlet({modulus},{index})"),
            Builtin::Product(v) => {
                write!(f, "product(")?;
                for (i, b) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{b}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Raw functional-equation and Euler-product data.
#[derive(Debug, Clone)]
pub struct RawDescriptor {
    pub name: String,
    pub gamma_factors: Vec<GammaFactor>,
    pub q_factor: f64,
    pub root_number: Complex64,
    pub pole_order: u32,
    pub euler_order: Option<u32>,
    pub theta: f64,
    pub euler_constant: Option<f64>,
    pub ramanujan_constant: f64,
    pub provider: Option<Arc<dyn CoefficientProvider>>,
}

/// Validated Selberg-class datum.
#[derive(Debug, Clone, Serialize)]
pub struct LFunctionDescriptor {
    pub name: String,
    pub gamma_factors: Vec<GammaFactor>,
    pub q_factor: f64,
    /// Informational only; no bound uses it.
    pub root_number: Complex64,
    pub pole_order: u32,
    pub euler_order: Option<u32>,
    pub theta: f64,
    pub euler_constant: f64,
    /// Constant value of `C_R(ε)`.
    pub ramanujan_constant: f64,
    pub degree: f64,
    pub log_conductor: f64,
    pub strong_lambda: bool,
    #[serde(skip)]
    pub characters: Vec<DirichletCharacter>,
    #[serde(skip)]
    provider: Option<Arc<dyn CoefficientProvider>>,
}

pub fn degree_of(gammas: &[GammaFactor]) -> f64 {
    2.0 * gammas.iter().map(|g| g.lambda).sum::<f64>()
}

/// `log q_L = d log 2π + 2 log Q + Σ 2λ log λ`.
pub fn log_conductor_of(gammas: &[GammaFactor], q_factor: f64) -> f64 {
    degree_of(gammas) * (2.0 * PI).ln()
        + 2.0 * q_factor.ln()
        + gammas.iter().map(|g| 2.0 * g.lambda * g.lambda.ln()).sum::<f64>()
}

pub fn make_descriptor(raw: RawDescriptor) -> Result<LFunctionDescriptor> {
    if raw.gamma_factors.is_empty() {
        return Err(Error::EmptyGammaFactors);
    }
    for g in &raw.gamma_factors {
        if !(g.lambda > 0.0) {
            return Err(Error::NonPositiveLambda(g.lambda));
        }
        if g.mu.re < 0.0 {
            return Err(Error::NegativeRealMu(g.mu.re));
        }
    }
    if !(raw.q_factor > 0.0) {
        return Err(Error::NonPositiveQ(raw.q_factor));
    }
    if !(0.0..0.5).contains(&raw.theta) {
        return Err(Error::InvalidTheta(raw.theta));
    }
    let degree = degree_of(&raw.gamma_factors);
    let log_conductor = log_conductor_of(&raw.gamma_factors, raw.q_factor);
    let strong_lambda = raw.gamma_factors.iter().all(|g| g.lambda == 0.5);
    let euler_constant = raw.euler_constant.unwrap_or(raw.euler_order.unwrap_or(1) as f64);
    Ok(LFunctionDescriptor {
        name: raw.name,
        gamma_factors: raw.gamma_factors,
        q_factor: raw.q_factor,
        root_number: raw.root_number,
        pole_order: raw.pole_order,
        euler_order: raw.euler_order,
        theta: raw.theta,
        euler_constant,
        ramanujan_constant: raw.ramanujan_constant,
        degree,
        log_conductor,
        strong_lambda,
        characters: Vec::new(),
        provider: raw.provider,
    })
}

impl LFunctionDescriptor {
    pub fn provider(&self) -> Option<&Arc<dyn CoefficientProvider>> {
        self.provider.as_ref()
    }

    /// `λ⁺ = max λ_j`.
    pub fn lambda_plus(&self) -> f64 {
        self.gamma_factors.iter().map(|g| g.lambda).fold(f64::MIN, f64::max)
    }

    /// `λ⁻ = min λ_j`.
    pub fn lambda_minus(&self) -> f64 {
        self.gamma_factors.iter().map(|g| g.lambda).fold(f64::MAX, f64::min)
    }

    /// `μ⁺ = max |μ_j|`.
    pub fn mu_plus(&self) -> f64 {
        self.gamma_factors.iter().map(|g| g.mu.norm()).fold(0.0, f64::max)
    }

    /// `m`, or an error when there is no polynomial Euler product.
    pub fn m(&self) -> Result<f64> {
        self.euler_order.map(|m| m as f64).ok_or(Error::MissingEulerOrder)
    }

    pub fn conductor(&self) -> f64 {
        self.log_conductor.exp()
    }

    /// Trivial zeros `-(k + μ_j)/λ_j` come from poles of the gamma factors.
    pub fn trivial_zero(&self, j: usize, k: u32) -> Complex64 {
        let g = self.gamma_factors[j];
        -(g.mu + k as f64) / g.lambda
    }
}

fn dirichlet_raw(chi: &DirichletCharacter) -> RawDescriptor {
    let q = chi.modulus as f64;
    RawDescriptor {
        name: if chi.modulus == 1 { "zeta".into() } else { format!("dirichlet({},{})", chi.modulus, chi.index) },
        gamma_factors: vec![GammaFactor::new(0.5, Complex64::new(chi.parity as f64 / 2.0, 0.0))],
        q_factor: (q / PI).sqrt(),
        root_number: chi.root_number(),
        pole_order: u32::from(chi.modulus == 1),
        euler_order: Some(1),
        theta: 0.0,
        euler_constant: Some(1.0),
        ramanujan_constant: 1.0,
        provider: Some(Arc::new(CharacterProduct { characters: vec![chi.clone()] })),
    }
}

pub fn zeta() -> LFunctionDescriptor {
    builtin(&Builtin::Zeta).expect("zeta is always available")
}

pub fn dirichlet(modulus: u64, index: u64) -> Result<LFunctionDescriptor> {
    builtin(&Builtin::Dirichlet { modulus, index })
}

/// Resolves a built-in; products multiply conductors and add degrees, pole
/// orders and Euler orders.
pub fn builtin(b: &Builtin) -> Result<LFunctionDescriptor> {
    let mut leaves = Vec::new();
    b.flatten(&mut leaves);
    let mut chars = Vec::with_capacity(leaves.len());
    for leaf in &leaves {
        let chi = match leaf {
            Builtin::Zeta => DirichletCharacter::conrey(1, 1)?,
            Builtin::Dirichlet { modulus, index } => {
                let chi = DirichletCharacter::conrey(*modulus, *index)?;
                if !chi.primitive || *modulus == 1 {
                    return Err(Error::NonPrimitiveCharacter { modulus: *modulus, index: *index });
                }
                chi
            }
            Builtin::Product(_) => unreachable!("flattened"),
        };
        chars.push(chi);
    }
    let raws: Vec<RawDescriptor> = chars.iter().map(dirichlet_raw).collect();
    let raw = if raws.len() == 1 {
        raws.into_iter().next().expect("one")
    } else {
        RawDescriptor {
            name: b.to_string(),
            gamma_factors: raws.iter().flat_map(|r| r.gamma_factors.clone()).collect(),
            q_factor: raws.iter().map(|r| r.q_factor).product(),
            root_number: raws.iter().map(|r| r.root_number).product(),
            pole_order: raws.iter().map(|r| r.pole_order).sum(),
            euler_order: Some(raws.len() as u32),
            theta: 0.0,
            euler_constant: Some(raws.len() as f64),
            ramanujan_constant: raws.len() as f64,
            provider: Some(Arc::new(CharacterProduct { characters: chars.clone() })),
        }
    };
    let mut d = make_descriptor(raw)?;
    d.characters = chars;
    Ok(d)
}

/// `(log τ, log log τ)` with `τ = q_L |t|^{d_L}`, never forming τ itself.
/// With `real_point` and `t = 0`, τ is replaced by `q_L`.
pub fn log_tau(desc: &LFunctionDescriptor, t: f64, real_point: bool) -> Result<(f64, f64)> {
    let lt = if t == 0.0 {
        if !real_point {
            return Err(Error::ZeroTWithoutRealPointFlag);
        }
        desc.log_conductor
    } else {
        desc.log_conductor + desc.degree * t.abs().ln()
    };
    Ok((lt, lt.ln()))
}

/// A point `σ + it` with τ carried in log coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvaluationPoint {
    pub sigma: f64,
    pub t: Option<f64>,
    pub log_abs_t: Option<f64>,
    pub log_tau: f64,
    pub log_log_tau: f64,
}

impl EvaluationPoint {
    pub fn new(desc: &LFunctionDescriptor, sigma: f64, t: f64) -> Result<Self> {
        let (log_tau, log_log_tau) = log_tau(desc, t, false)?;
        Self::checked(sigma, Some(t), Some(t.abs().ln()), log_tau, log_log_tau)
    }

    /// `t = 0` variant with τ replaced by the conductor.
    pub fn real_point(desc: &LFunctionDescriptor, sigma: f64) -> Result<Self> {
        let (log_tau, log_log_tau) = log_tau(desc, 0.0, true)?;
        Self::checked(sigma, Some(0.0), None, log_tau, log_log_tau)
    }

    pub fn from_log_tau(sigma: f64, log_tau: f64) -> Result<Self> {
        Self::checked(sigma, None, None, log_tau, log_tau.ln())
    }

    /// For τ too large to have a representable `t`.
    pub fn from_log_log_tau(sigma: f64, log_log_tau: f64) -> Result<Self> {
        Self::checked(sigma, None, None, log_log_tau.exp(), log_log_tau)
    }

    fn checked(sigma: f64, t: Option<f64>, log_abs_t: Option<f64>, log_tau: f64, log_log_tau: f64) -> Result<Self> {
        if !(log_tau > 1.0) {
            return Err(Error::LogTauTooSmall(log_tau));
        }
        Ok(Self { sigma, t, log_abs_t, log_tau, log_log_tau })
    }

    pub fn with_sigma(&self, sigma: f64) -> Self {
        Self { sigma, ..*self }
    }
}

/// Descriptor config document.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorConfig {
    #[serde(default)]
    pub gamma_factors: Option<Vec<GammaFactorConfig>>,
    #[serde(rename = "Q", default)]
    pub q: Option<f64>,
    #[serde(default)]
    pub pole_order: Option<u32>,
    #[serde(default)]
    pub euler_order: Option<u32>,
    #[serde(default)]
    pub theta: Option<f64>,
    #[serde(default)]
    pub c_e: Option<f64>,
    #[serde(default)]
    pub builtin: Option<String>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaFactorConfig {
    pub lambda: f64,
    /// `[re, im]`.
    #[serde(default)]
    pub mu: [f64; 2],
}

impl DescriptorConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))
    }

    /// Fields present in the document override those of `builtin`.
    pub fn into_descriptor(self) -> Result<LFunctionDescriptor> {
        let base = self.builtin.as_deref().map(|b| Builtin::parse(b).and_then(|b| builtin(&b))).transpose()?;
        let gamma_factors = match (&self.gamma_factors, &base) {
            (Some(g), _) => g.iter().map(|g| GammaFactor::new(g.lambda, Complex64::new(g.mu[0], g.mu[1]))).collect(),
            (None, Some(b)) => b.gamma_factors.clone(),
            (None, None) => Vec::new(),
        };
        let name = base.as_ref().map(|b| b.name.clone()).unwrap_or_else(|| "custom".to_string());
        let raw = RawDescriptor {
            name,
            gamma_factors,
            q_factor: self.q.or(base.as_ref().map(|b| b.q_factor)).unwrap_or(f64::NAN),
            root_number: base.as_ref().map(|b| b.root_number).unwrap_or(Complex64::new(1.0, 0.0)),
            pole_order: self.pole_order.or(base.as_ref().map(|b| b.pole_order)).unwrap_or(0),
            euler_order: self.euler_order.or(base.as_ref().and_then(|b| b.euler_order)),
            theta: self.theta.or(base.as_ref().map(|b| b.theta)).unwrap_or(0.0),
            euler_constant: self.c_e.or(base.as_ref().map(|b| b.euler_constant)),
            ramanujan_constant: base.as_ref().map(|b| b.ramanujan_constant).unwrap_or(1.0),
            provider: base.as_ref().and_then(|b| b.provider.clone()),
        };
        let mut d = make_descriptor(raw)?;
        if let Some(b) = base {
            d.characters = b.characters;
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn zeta_has_degree_and_conductor_one() {
        let z = zeta();
        assert_eq!(z.degree, 1.0);
        assert!(z.log_conductor.abs() < 1e-15);
        assert!(z.strong_lambda);
        assert_eq!(z.pole_order, 1);
    }

    #[test]
    fn dirichlet_conductor_is_modulus() {
        let d = dirichlet(5, 2).unwrap();
        assert_eq!(d.degree, 1.0);
        assert_relative_eq!(d.conductor(), 5.0, max_relative = 1e-13);
        let d4 = builtin(&Builtin::parse("dirichlet(4,3)").unwrap()).unwrap();
        assert_relative_eq!(d4.conductor(), 4.0, max_relative = 1e-13);
        assert_eq!(d4.pole_order, 0);
    }

    #[test]
    fn negative_lambda_rejected() {
        let mut raw = dirichlet_raw(&DirichletCharacter::conrey(1, 1).unwrap());
        raw.gamma_factors[0].lambda = -1.0;
        assert_eq!(make_descriptor(raw).unwrap_err(), Error::NonPositiveLambda(-1.0));
        let mut raw = dirichlet_raw(&DirichletCharacter::conrey(1, 1).unwrap());
        raw.gamma_factors.clear();
        assert_eq!(make_descriptor(raw).unwrap_err(), Error::EmptyGammaFactors);
        let mut raw = dirichlet_raw(&DirichletCharacter::conrey(1, 1).unwrap());
        raw.gamma_factors[0].mu = Complex64::new(-0.5, 0.0);
        assert!(matches!(make_descriptor(raw), Err(Error::NegativeRealMu(_))));
    }

    #[test]
    fn product_sums_invariants() {
        let p = builtin(&Builtin::parse("product(zeta,dirichlet(5,2))").unwrap()).unwrap();
        assert_eq!(p.euler_order, Some(2));
        assert_eq!(p.degree, 2.0);
        assert_eq!(p.pole_order, 1);
        assert_relative_eq!(p.conductor(), 5.0, max_relative = 1e-13);
        let single = builtin(&Builtin::Product(vec![Builtin::Zeta])).unwrap();
        let z = zeta();
        assert_eq!(single.degree, z.degree);
        assert_eq!(single.log_conductor, z.log_conductor);
        assert_eq!(single.pole_order, z.pole_order);
        assert_eq!(single.euler_order, z.euler_order);
    }

    #[test]
    fn principal_character_rejected() {
        assert!(matches!(dirichlet(5, 1), Err(Error::NonPrimitiveCharacter { .. })));
        assert!(matches!(Builtin::parse("sine"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn log_tau_examples() {
        let z = zeta();
        let (lt, llt) = log_tau(&z, std::f64::consts::E, false).unwrap();
        assert_relative_eq!(lt, 1.0, epsilon = 1e-15);
        assert_relative_eq!(llt, 0.0, epsilon = 1e-15);
        let d5 = dirichlet(5, 2).unwrap();
        let (lt, _) = log_tau(&d5, 2f64.exp(), false).unwrap();
        assert_relative_eq!(lt, 5f64.ln() + 2.0, epsilon = 1e-13);
        assert_eq!(log_tau(&z, 0.0, false).unwrap_err(), Error::ZeroTWithoutRealPointFlag);
        let (lt0, _) = log_tau(&z, 0.0, true).unwrap();
        assert!(lt0.abs() < 1e-15);
        assert!(matches!(EvaluationPoint::real_point(&z, 1.0), Err(Error::LogTauTooSmall(_))));
    }

    #[test]
    fn config_round_trip() {
        let cfg = DescriptorConfig::from_json(
            r#"{"gamma_factors":[{"lambda":0.5,"mu":[0,0]}],"Q":0.5641895835477563,"pole_order":1,"euler_order":1,"theta":0,"c_e":1}"#,
        )
        .unwrap();
        let d = cfg.into_descriptor().unwrap();
        assert!(d.log_conductor.abs() < 1e-12);
        assert!(d.provider().is_none());
        let from_builtin = DescriptorConfig::from_json(r#"{"builtin":"dirichlet(4,3)"}"#).unwrap().into_descriptor().unwrap();
        assert!(from_builtin.provider().is_some());
        assert!(DescriptorConfig::from_json(r#"{"bogus":1}"#).is_err());
    }
}
