//! Sieve tables for `Λ`, `Λ_L` and the truncated prime sums built from them.

use crate::error::{Error, Result};
use crate::selberg::LFunctionDescriptor;
use crate::special::li;
use num_complex::Complex64;
use serde::Serialize;

/// Largest table limit accepted by [`build_tables`] (about 3 GiB of tables).
pub const DEFAULT_LIMIT_BUDGET: u64 = 100_000_000;

/// `ψ(u) < 1.03883 u` for all `u > 0` (Rosser–Schoenfeld).
pub const PSI_RATIO_MAX: f64 = 1.03883;

/// Dense arithmetic tables up to `limit`.
#[derive(Debug, Clone)]
pub struct ArithmeticTables {
    pub limit: u64,
    /// `Λ(n)`, index `n`.
    pub von_mangoldt: Vec<f64>,
    /// `Λ_L(n)`, index `n`.
    pub lambda_l: Vec<Complex64>,
    /// Primes up to `limit`.
    pub primes: Vec<u32>,
    /// `|a(p)|` aligned with `primes`.
    pub ap_abs: Vec<f64>,
    /// Prime powers up to `limit` in increasing order.
    prime_powers: Vec<u32>,
    /// `ψ(n)` prefix sums.
    psi_prefix: Vec<f64>,
    /// `ψ̃_L(n)` prefix sums.
    psi_tilde_prefix: Vec<f64>,
    /// `m` of the descriptor, when it has a polynomial Euler product.
    pub euler_order: Option<u32>,
}

/// Boolean sieve of Eratosthenes; `is_prime[n]` for `n ≤ limit`.
pub fn prime_sieve(limit: usize) -> Vec<bool> {
    let mut is_prime = vec![true; limit + 1];
    is_prime[0] = false;
    if limit >= 1 {
        is_prime[1] = false;
    }
    let mut p = 2;
    while p * p <= limit {
        if is_prime[p] {
            let mut k = p * p;
            while k <= limit {
                is_prime[k] = false;
                k += p;
            }
        }
        p += 1;
    }
    is_prime
}

pub fn build_tables(desc: &LFunctionDescriptor, limit: u64) -> Result<ArithmeticTables> {
    build_tables_with_budget(desc, limit, DEFAULT_LIMIT_BUDGET)
}

pub fn build_tables_with_budget(desc: &LFunctionDescriptor, limit: u64, budget: u64) -> Result<ArithmeticTables> {
    if limit < 2 || limit > budget || limit > u32::MAX as u64 {
        return Err(Error::LimitTooLarge(limit));
    }
    let provider = desc.provider().ok_or(Error::NoCoefficientProvider)?;
    let n = limit as usize;
    let is_prime = prime_sieve(n);
    let mut von_mangoldt = vec![0.0; n + 1];
    let mut lambda_l = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut primes = Vec::new();
    let mut ap_abs = Vec::new();
    let mut prime_powers = Vec::new();
    for p in 2..=n {
        if !is_prime[p] {
            continue;
        }
        primes.push(p as u32);
        ap_abs.push(provider.a_p(p as u64).norm());
        let lp = (p as f64).ln();
        let mut pk = p;
        let mut k = 1;
        loop {
            von_mangoldt[pk] = lp;
            lambda_l[pk] = provider.lambda_prime_power(p as u64, k);
            prime_powers.push(pk as u32);
            match pk.checked_mul(p) {
                Some(next) if next <= n => {
                    pk = next;
                    k += 1;
                }
                _ => break,
            }
        }
    }
    prime_powers.sort_unstable();
    let mut psi_prefix = vec![0.0; n + 1];
    let mut psi_tilde_prefix = vec![0.0; n + 1];
    let (mut a, mut b) = (0.0, 0.0);
    for i in 0..=n {
        a += von_mangoldt[i];
        b += lambda_l[i].norm();
        psi_prefix[i] = a;
        psi_tilde_prefix[i] = b;
    }
    Ok(ArithmeticTables {
        limit,
        von_mangoldt,
        lambda_l,
        primes,
        ap_abs,
        prime_powers,
        psi_prefix,
        psi_tilde_prefix,
        euler_order: desc.euler_order,
    })
}

impl ArithmeticTables {
    fn index(&self, x: f64) -> Result<usize> {
        if !(x >= 2.0 && x <= self.limit as f64) {
            return Err(Error::OutOfTableRange { value: x, lo: 2.0, hi: self.limit as f64 });
        }
        Ok(x.floor() as usize)
    }

    /// `|Λ_L(n)|`.
    pub fn lambda_abs(&self, n: usize) -> f64 {
        self.lambda_l[n].norm()
    }

    /// `ψ(x) = Σ_{n≤x} Λ(n)`.
    pub fn psi(&self, x: f64) -> Result<f64> {
        Ok(self.psi_prefix[self.index(x)?])
    }

    /// Prime powers `≤ x`, ascending.
    pub fn prime_powers_upto(&self, x: f64) -> &[u32] {
        let end = self.prime_powers.partition_point(|&n| (n as f64) <= x);
        &self.prime_powers[..end]
    }
}

/// `ψ̃_L(x) = Σ_{n≤x} |Λ_L(n)|`.
pub fn psi_tilde(tables: &ArithmeticTables, x: f64) -> Result<f64> {
    Ok(tables.psi_tilde_prefix[tables.index(x)?])
}

/// `y = exp(α/(σ−½))`, `x = y⁻¹ (log τ)²`; pass `log q_L` for the real-point variant.
pub fn select_xy(sigma: f64, alpha: f64, log_tau: f64) -> Result<(f64, f64)> {
    if !(sigma > 0.5 && sigma <= 1.5) {
        return Err(Error::DomainViolation(format!("sigma = {sigma} outside (1/2, 3/2]")));
    }
    if alpha < std::f64::consts::LN_2 {
        return Err(Error::DomainViolation(format!("alpha = {alpha} below log 2")));
    }
    let log_y = alpha / (sigma - 0.5);
    let y = log_y.exp();
    let x = (2.0 * log_tau.ln() - log_y).exp();
    if !(x >= 2.0) {
        return Err(Error::XBelowTwo(x));
    }
    if !(y >= 2.0) {
        return Err(Error::YBelowTwo(y));
    }
    Ok((x, y))
}

fn check_xy(tables: &ArithmeticTables, x: f64, y: f64) -> Result<()> {
    if !(x >= 2.0) {
        return Err(Error::XBelowTwo(x));
    }
    if !(y >= 2.0) {
        return Err(Error::YBelowTwo(y));
    }
    if x * y > tables.limit as f64 {
        return Err(Error::OutOfTableRange { value: x * y, lo: 2.0, hi: tables.limit as f64 });
    }
    Ok(())
}

/// `Σ_{n≤x} |Λ_L(n)| n^{-σ} + (log y)⁻¹ Σ_{x<n≤xy} |Λ_L(n)| log(xy/n) n^{-σ}`.
pub fn s_exact(tables: &ArithmeticTables, sigma: f64, x: f64, y: f64) -> Result<f64> {
    check_xy(tables, x, y)?;
    let xy = x * y;
    let log_xy = xy.ln();
    let log_y = y.ln();
    let mut head = 0.0;
    let mut tail = 0.0;
    for &n in tables.prime_powers_upto(xy) {
        let nf = n as f64;
        let w = tables.lambda_abs(n as usize) * (-sigma * nf.ln()).exp();
        if nf <= x {
            head += w;
        } else {
            tail += w * (log_xy - nf.ln());
        }
    }
    Ok(head + tail / log_y)
}

/// `Ŝ_{L,x,y}(σ)` together with `E_x` split into an exact partial sum and a
/// rigorous tail bound.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SHatEx {
    pub s_hat: f64,
    /// `Σ_{x<n≤cutoff} |Λ_L(n)| / (n^{3/2} log n)`.
    pub ex_partial: f64,
    /// Upper bound for `Σ_{n>cutoff}`.
    pub ex_tail_bound: f64,
    /// `ex_partial + ex_tail_bound`.
    pub ex_upper: f64,
}

/// Upper bound for `Σ_{n>N} Λ(n)/(n^{3/2} log n)` from partial summation with
/// `ψ(u) ≤ 1.03883 u`.
pub fn ex_tail_bound_zeta(n_cut: f64, psi_n: f64) -> f64 {
    let ln = n_cut.ln();
    PSI_RATIO_MAX * 3.0 / (n_cut.sqrt() * ln) - psi_n / (n_cut.powf(1.5) * ln)
}

pub fn s_hat_and_ex_exact(tables: &ArithmeticTables, sigma: f64, x: f64, y: f64, cutoff: f64) -> Result<SHatEx> {
    check_xy(tables, x, y)?;
    let m = tables.euler_order.ok_or(Error::MissingEulerOrder)? as f64;
    let cut_idx = tables.index(cutoff)?;
    let xy = x * y;
    let log_xy = xy.ln();
    let log_y = y.ln();
    let mut head = 0.0;
    let mut tail = 0.0;
    for &n in tables.prime_powers_upto(xy) {
        let nf = n as f64;
        let ln = nf.ln();
        let w = tables.lambda_abs(n as usize) * (-sigma * ln).exp() / ln;
        if nf <= x {
            head += w;
        } else {
            tail += w * (log_xy - ln);
        }
    }
    let mut ex_partial = 0.0;
    for &n in tables.prime_powers_upto(cut_idx as f64) {
        let nf = n as f64;
        if nf > x {
            ex_partial += tables.lambda_abs(n as usize) / (nf.powf(1.5) * nf.ln());
        }
    }
    let n_cut = cut_idx as f64;
    let ex_tail_bound = m * ex_tail_bound_zeta(n_cut, tables.psi_prefix[cut_idx]);
    Ok(SHatEx { s_hat: head + tail / log_y, ex_partial, ex_tail_bound, ex_upper: ex_partial + ex_tail_bound })
}

/// One row of the prime-coefficient statistics.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct StatsRow {
    pub x: f64,
    /// `Σ_{p≤x} |a(p)|`.
    pub sum_abs: f64,
    /// `Σ_{p≤x} |a(p)|²`.
    pub sum_sq: f64,
    pub abs_over_li: f64,
    pub sq_over_li: f64,
    /// Least-squares `κ` for `Σ|a(p)|² ≈ κ li(x)` over the grid points so far.
    pub kappa: f64,
    /// Same fit for `Σ|a(p)|`.
    pub kappa_abs: f64,
}

/// Empirical mean and mean-square of `|a(p)|`, compared against `li(x)`.
pub fn prime_coefficient_stats(tables: &ArithmeticTables, grid: &[f64]) -> Result<Vec<StatsRow>> {
    let mut xs: Vec<f64> = grid.to_vec();
    xs.sort_by(f64::total_cmp);
    for &x in &xs {
        tables.index(x)?;
    }
    let mut rows = Vec::with_capacity(xs.len());
    let (mut s1, mut s2) = (0.0, 0.0);
    let mut idx = 0;
    let (mut num2, mut num1, mut den) = (0.0, 0.0, 0.0);
    for &x in &xs {
        while idx < tables.primes.len() && tables.primes[idx] as f64 <= x {
            let a = tables.ap_abs[idx];
            s1 += a;
            s2 += a * a;
            idx += 1;
        }
        let l = li(x);
        num2 += s2 * l;
        num1 += s1 * l;
        den += l * l;
        rows.push(StatsRow {
            x,
            sum_abs: s1,
            sum_sq: s2,
            abs_over_li: s1 / l,
            sq_over_li: s2 / l,
            kappa: num2 / den,
            kappa_abs: num1 / den,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::selberg::{builtin, zeta, Builtin};
    use approx::assert_relative_eq;

    #[test]
    fn zeta_small_table() {
        let t = build_tables(&zeta(), 10).unwrap();
        let nonzero: Vec<usize> = (1..=10).filter(|&n| t.von_mangoldt[n] != 0.0).collect();
        assert_eq!(nonzero, vec![2, 3, 4, 5, 7, 8, 9]);
        assert!(matches!(build_tables(&zeta(), 1), Err(Error::LimitTooLarge(1))));
    }

    #[test]
    fn product_lambda_at_three() {
        let d = builtin(&Builtin::parse("product(zeta,dirichlet(5,2))").unwrap()).unwrap();
        let t = build_tables(&d, 10).unwrap();
        let l3 = 3f64.ln();
        assert!((t.lambda_l[3] - Complex64::new(l3, -l3)).norm() < 1e-14);
    }

    #[test]
    fn psi_tilde_examples() {
        let t = build_tables(&zeta(), 100).unwrap();
        let expect = 3.0 * 2f64.ln() + 2.0 * 3f64.ln() + 5f64.ln() + 7f64.ln();
        assert_relative_eq!(psi_tilde(&t, 10.0).unwrap(), expect, epsilon = 1e-13);
        assert_relative_eq!(psi_tilde(&t, 10.0).unwrap(), 7.83201, epsilon = 1e-5);
        assert_relative_eq!(psi_tilde(&t, 2.0).unwrap(), 2f64.ln(), epsilon = 1e-15);
        assert!(matches!(psi_tilde(&t, 1.5), Err(Error::OutOfTableRange { .. })));
        assert!(matches!(psi_tilde(&t, 101.0), Err(Error::OutOfTableRange { .. })));
    }

    #[test]
    fn select_xy_examples() {
        let (x, y) = select_xy(1.0, std::f64::consts::LN_2, 100.0).unwrap();
        assert_relative_eq!(y, 4.0, epsilon = 1e-12);
        assert_relative_eq!(x, 2500.0, epsilon = 1e-9);
        let (x, y) = select_xy(0.75, 1.278, 30.0).unwrap();
        assert_relative_eq!(y, 5.112f64.exp(), max_relative = 1e-12);
        assert_relative_eq!(x, 900.0 / 5.112f64.exp(), max_relative = 1e-12);
        // y = e^{5.112} leaves x ≈ 1.15 at log τ = 13.8155
        assert!(matches!(select_xy(0.75, 1.278, 13.8155), Err(Error::XBelowTwo(_))));
        assert!(matches!(select_xy(0.51, 1.278, 10.0), Err(Error::XBelowTwo(_))));
    }

    #[test]
    fn s_exact_small_case() {
        let t = build_tables(&zeta(), 100).unwrap();
        let v = s_exact(&t, 1.0, 4.0, 2.0).unwrap();
        let head = 2f64.ln() / 2.0 + 3f64.ln() / 3.0 + 2f64.ln() / 4.0;
        let tail = (5f64.ln() * (8.0f64 / 5.0).ln() / 5.0 + 7f64.ln() * (8.0f64 / 7.0).ln() / 7.0) / 2f64.ln();
        assert_relative_eq!(v, head + tail, epsilon = 1e-14);
        assert_relative_eq!(v, 1.157882, epsilon = 2e-6);
        assert!(s_exact(&t, 60.0, 2.0, 2.0).unwrap() < 1e-17);
    }

    #[test]
    fn s_hat_two_two() {
        let t = build_tables(&zeta(), 1000).unwrap();
        let r = s_hat_and_ex_exact(&t, 1.0, 2.0, 2.0, 1000.0).unwrap();
        // n = 2 contributes 1/2 and n = 3 the weighted term
        let expect = 0.5 + (4.0f64 / 3.0).ln() / (3.0 * 2f64.ln());
        assert_relative_eq!(r.s_hat, expect, epsilon = 1e-14);
    }

    #[test]
    fn ex_upper_bound_and_monotone() {
        let t = build_tables(&zeta(), 1_000_000).unwrap();
        let r100 = s_hat_and_ex_exact(&t, 1.0, 100.0, 2.0, 1e6).unwrap();
        let x = 100f64;
        let rhs = 2.0 / (x.sqrt() * x.ln()) + 5.0 * (1.0 + x.ln()) / (16.0 * std::f64::consts::PI * x);
        assert_relative_eq!(rhs, 0.049005, epsilon = 1e-6);
        assert!(r100.ex_upper <= rhs);
        let r1000 = s_hat_and_ex_exact(&t, 1.0, 1000.0, 2.0, 1e6).unwrap();
        assert!(r100.ex_partial >= r1000.ex_partial);
        assert!(r100.ex_tail_bound > 0.0);
    }

    #[test]
    fn stats_for_zeta() {
        let t = build_tables(&zeta(), 1000).unwrap();
        let rows = prime_coefficient_stats(&t, &[100.0, 1000.0]).unwrap();
        assert_eq!(rows[0].sum_abs, 25.0);
        assert_eq!(rows[1].sum_abs, 168.0);
        assert_eq!(rows[0].sum_sq, 25.0);
    }
}
