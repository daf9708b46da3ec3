use proptest::prelude::*;
use slb_core::arithmetic::{build_tables, s_exact, ArithmeticTables};
use slb_core::character::factorize;
use slb_core::selberg::{builtin, zeta, Builtin};
use std::sync::OnceLock;

const N: u64 = 100_000;
const BUILTINS: [&str; 4] = ["zeta", "dirichlet(5,2)", "dirichlet(7,3)", "product(zeta,dirichlet(5,2))"];

fn tables(name: &str) -> &'static ArithmeticTables {
    static CACHE: OnceLock<Vec<ArithmeticTables>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        BUILTINS.iter().map(|b| build_tables(&builtin(&Builtin::parse(b).unwrap()).unwrap(), N).unwrap()).collect()
    });
    &all[BUILTINS.iter().position(|b| *b == name).unwrap()]
}

/// `Λ(n)` by trial factorization.
fn von_mangoldt(n: u64) -> f64 {
    match factorize(n).as_slice() {
        [(p, _)] => (*p as f64).ln(),
        _ => 0.0,
    }
}

/// `ψ(x)` from a segmented sieve with √x base primes.
fn psi_segmented(x: u64) -> f64 {
    let root = (x as f64).sqrt() as u64 + 1;
    let mut base = vec![true; root as usize + 1];
    let mut small = Vec::new();
    for i in 2..=root as usize {
        if base[i] {
            small.push(i as u64);
            let mut j = i * i;
            while j <= root as usize {
                base[j] = false;
                j += i;
            }
        }
    }
    let mut total = 0.0;
    let seg = 4096u64;
    let mut lo = 2u64;
    while lo <= x {
        let hi = (lo + seg - 1).min(x);
        let mut is_p = vec![true; (hi - lo + 1) as usize];
        for &p in &small {
            let start = (p * p).max(lo.div_ceil(p) * p);
            let mut m = start;
            while m <= hi {
                is_p[(m - lo) as usize] = false;
                m += p;
            }
        }
        for (k, &flag) in is_p.iter().enumerate() {
            if flag {
                let p = lo + k as u64;
                let lp = (p as f64).ln();
                let mut pk = p;
                while pk <= x {
                    total += lp;
                    pk = match pk.checked_mul(p) {
                        Some(v) => v,
                        None => break,
                    };
                }
            }
        }
        lo = hi + 1;
    }
    total
}

#[test]
fn zeta_lambda_is_von_mangoldt() {
    let t = tables("zeta");
    for n in 1..=N as usize {
        let want = von_mangoldt(n as u64);
        assert!((t.lambda_l[n].re - want).abs() < 1e-12 && t.lambda_l[n].im.abs() < 1e-12, "n = {n}");
    }
}

#[test]
fn lambda_bounded_by_m_lambda() {
    let z = tables("zeta");
    for b in BUILTINS {
        let t = tables(b);
        let m = t.euler_order.unwrap() as f64;
        for n in 1..=N as usize {
            assert!(t.lambda_abs(n) <= m * z.von_mangoldt[n] + 1e-12, "{b} at n = {n}");
        }
    }
}

#[test]
fn degree_and_conductor_round_trip() {
    for b in BUILTINS {
        let d = builtin(&Builtin::parse(b).unwrap()).unwrap();
        let degree: f64 = 2.0 * d.gamma_factors.iter().map(|g| g.lambda).sum::<f64>();
        let log_q = degree * (2.0 * std::f64::consts::PI).ln()
            + 2.0 * d.q_factor.ln()
            + d.gamma_factors.iter().map(|g| 2.0 * g.lambda * g.lambda.ln()).sum::<f64>();
        assert!((degree - d.degree).abs() <= 1e-12 * degree);
        assert!((log_q - d.log_conductor).abs() <= 1e-12 * log_q.abs().max(1.0), "{b}");
        assert!((log_q.exp() - d.conductor()).abs() <= 1e-12 * d.conductor());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn psi_matches_segmented_sieve(x in 2u64..=N) {
        let t = tables("zeta");
        let a = t.psi(x as f64).unwrap();
        let b = psi_segmented(x);
        prop_assert!((a - b).abs() <= 1e-9 * b.max(1.0), "ψ({x}) = {a} vs {b}");
    }

    #[test]
    fn psi_within_schoenfeld_range(x in 74.0f64..N as f64) {
        let t = tables("zeta");
        let lx = x.ln();
        prop_assert!((t.psi(x).unwrap() - x).abs() <= x.sqrt() * lx * lx / (8.0 * std::f64::consts::PI));
    }

    #[test]
    fn s_exact_nonincreasing_in_sigma(s1 in 0.51f64..1.5, ds in 0.0f64..0.5, x in 2.0f64..300.0, y in 2.0f64..300.0) {
        let t = tables("zeta");
        let s2 = (s1 + ds).min(1.5);
        prop_assert!(s_exact(t, s2, x, y).unwrap() <= s_exact(t, s1, x, y).unwrap() + 1e-12);
    }

    #[test]
    fn s_exact_dominated_by_m_times_zeta(k in 1usize..4, sigma in 0.51f64..1.5, x in 2.0f64..300.0, y in 2.0f64..300.0) {
        let t = tables(BUILTINS[k]);
        let m = t.euler_order.unwrap() as f64;
        let z = s_exact(tables("zeta"), sigma, x, y).unwrap();
        prop_assert!(s_exact(t, sigma, x, y).unwrap() <= m * z * (1.0 + 1e-12));
    }
}

#[test]
fn zeta_descriptor_has_unit_conductor() {
    let z = zeta();
    assert!((z.conductor() - 1.0).abs() < 1e-12);
}
