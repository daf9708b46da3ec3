//! Dirichlet characters in Conrey labeling, stored as full value tables.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization by trial division, as `(p, e)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn multiplicative_order(g: u64, m: u64) -> u64 {
    let mut x = g % m;
    let mut k = 1;
    while x != 1 {
        x = x * g % m;
        k += 1;
    }
    k
}

/// Least primitive root mod `p` that is also a primitive root mod `p²`.
fn conrey_generator(p: u64) -> u64 {
    let pp = p * p;
    let phi = p * (p - 1);
    (2..p)
        .find(|&g| multiplicative_order(g, p) == p - 1 && multiplicative_order(g, pp) == phi)
        .expect("odd prime has a primitive root")
}

/// `e(x) = exp(2πix)` with quarter turns snapped to exact values.
fn unit_root(frac: f64) -> Complex64 {
    let f = frac.rem_euclid(1.0);
    let q = 4.0 * f;
    if (q - q.round()).abs() < 1e-12 {
        return match (q.round() as i64).rem_euclid(4) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * PI * f)
}

/// Phase table `m ↦ ind-based phase` on units mod `p^e` for Conrey index `n`.
/// Entries for non-units are `None`.
fn local_phases(p: u64, e: u32, n: u64) -> Vec<Option<f64>> {
    let pe = p.pow(e);
    let mut out = vec![None; pe as usize];
    if p == 2 {
        if e == 1 {
            out[1] = Some(0.0);
            return out;
        }
        // m ≡ ε 5^a (mod 2^e), ε ∈ {±1}
        let order = if e == 2 { 1 } else { 1u64 << (e - 2) };
        let mut ind = vec![(0u64, 0u64); pe as usize];
        let mut x = 1u64;
        for a in 0..order {
            ind[x as usize] = (0, a);
            ind[((pe - x) % pe) as usize] = (1, a);
            x = x * 5 % pe;
        }
        let (en, an) = ind[(n % pe) as usize];
        for m in (1..pe).step_by(2) {
            let (em, am) = ind[m as usize];
            let mut ph = (en * em) as f64 / 2.0;
            if e >= 3 {
                ph += ((an * am) % order) as f64 / order as f64;
            }
            out[m as usize] = Some(ph);
        }
        return out;
    }
    let g = conrey_generator(p);
    let phi = pe / p * (p - 1);
    let mut ind = vec![0u64; pe as usize];
    let mut x = 1u64;
    for k in 0..phi {
        ind[x as usize] = k;
        x = x * g % pe;
    }
    let inn = ind[(n % pe) as usize];
    for m in 1..pe {
        if m % p != 0 {
            out[m as usize] = Some(((inn * ind[m as usize]) % phi) as f64 / phi as f64);
        }
    }
    out
}

/// A Dirichlet character `χ_q(n, ·)`.
#[derive(Debug, Clone, Serialize)]
pub struct DirichletCharacter {
    pub modulus: u64,
    pub index: u64,
    #[serde(skip)]
    values: Vec<Complex64>,
    pub primitive: bool,
    /// 0 for even, 1 for odd.
    pub parity: u8,
}

impl DirichletCharacter {
    /// Character with Conrey label `(modulus, index)`.
    pub fn conrey(modulus: u64, index: u64) -> Result<Self> {
        if modulus == 0 || index == 0 || index > modulus.max(1) || gcd(index, modulus) != 1 {
            return Err(Error::InvalidCharacter { modulus, index });
        }
        if modulus == 1 {
            return Ok(Self { modulus, index, values: vec![Complex64::new(1.0, 0.0)], primitive: true, parity: 0 });
        }
        let factors = factorize(modulus);
        let locals: Vec<(u64, Vec<Option<f64>>)> =
            factors.iter().map(|&(p, e)| (p.pow(e), local_phases(p, e, index))).collect();
        let mut values = vec![Complex64::new(0.0, 0.0); modulus as usize];
        for m in 0..modulus {
            if gcd(m, modulus) != 1 {
                continue;
            }
            let mut ph = 0.0;
            for (pe, table) in &locals {
                ph += table[(m % pe) as usize].expect("unit residue");
            }
            values[m as usize] = unit_root(ph);
        }
        let minus_one = values[(modulus - 1) as usize];
        let parity = if minus_one.re < 0.0 { 1 } else { 0 };
        let mut chi = Self { modulus, index, values, primitive: false, parity };
        chi.primitive = chi.check_primitive(&factors);
        Ok(chi)
    }

    /// Nontrivial character mod 4.
    pub fn mod4() -> Self {
        Self::conrey(4, 3).expect("valid label")
    }

    fn check_primitive(&self, factors: &[(u64, u32)]) -> bool {
        let q = self.modulus;
        factors.iter().all(|&(p, _)| {
            let step = q / p;
            (0..p).any(|k| {
                let m = (1 + k * step) % q;
                gcd(m, q) == 1 && (self.values[m as usize] - 1.0).norm() > 1e-9
            })
        })
    }

    pub fn value(&self, n: u64) -> Complex64 {
        self.values[(n % self.modulus) as usize]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn is_principal(&self) -> bool {
        self.index == 1
    }

    /// Gauss sum `Σ χ(a) e(a/q)`.
    pub fn gauss_sum(&self) -> Complex64 {
        (0..self.modulus)
            .map(|a| self.values[a as usize] * Complex64::from_polar(1.0, 2.0 * PI * a as f64 / self.modulus as f64))
            .sum()
    }

    /// Root number `τ(χ) / (i^a √q)` of a primitive character.
    pub fn root_number(&self) -> Complex64 {
        let ia = if self.parity == 1 { Complex64::new(0.0, 1.0) } else { Complex64::new(1.0, 0.0) };
        self.gauss_sum() / (ia * (self.modulus as f64).sqrt())
    }
}
