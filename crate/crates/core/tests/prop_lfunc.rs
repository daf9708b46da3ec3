use num_complex::Complex64;
use proptest::prelude::*;
use slb_core::character::DirichletCharacter;
use slb_core::lfunc::{dirichlet_logderiv, l_logderiv, log_zeta_tracked, zeta_logderiv, zeta_value, EvalConfig};
use slb_core::selberg::{builtin, Builtin};
use slb_core::special::ln_gamma;
use std::f64::consts::PI;

fn cfg() -> EvalConfig {
    EvalConfig { target_abs_error: 1e-13, ..Default::default() }
}

/// `2^s π^{s−1} sin(πs/2) Γ(1−s)`.
fn chi_factor(s: Complex64) -> Complex64 {
    let two = Complex64::new(2.0, 0.0);
    let pi = Complex64::new(PI, 0.0);
    two.powc(s) * pi.powc(s - 1.0) * (s * PI / 2.0).sin() * ln_gamma(Complex64::new(1.0, 0.0) - s).exp()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn functional_equation(sigma in 0.3f64..0.7, t in -50.0f64..50.0) {
        let s = Complex64::new(sigma, t);
        let lhs = zeta_value(s, &cfg()).unwrap();
        let rhs = chi_factor(s) * zeta_value(Complex64::new(1.0, 0.0) - s, &cfg()).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-8 * lhs.norm().max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn logderiv_matches_finite_differences(sigma in 1.0f64..2.0, t in 10.0f64..500.0) {
        let h = 1e-4;
        let up = log_zeta_tracked(sigma + h, t, &cfg()).unwrap();
        let dn = log_zeta_tracked(sigma - h, t, &cfg()).unwrap();
        let fd = (up - dn) / (2.0 * h);
        let d = zeta_logderiv(Complex64::new(sigma, t), &cfg()).unwrap();
        prop_assert!((fd - d).norm() < 1e-6, "{fd} vs {d}");
    }

    #[test]
    fn product_logderiv_is_sum_of_factors(sigma in 0.55f64..2.0, t in 1.0f64..300.0) {
        let s = Complex64::new(sigma, t);
        let p = builtin(&Builtin::parse("product(zeta,dirichlet(5,2))").unwrap()).unwrap();
        let chi = DirichletCharacter::conrey(5, 2).unwrap();
        let want = zeta_logderiv(s, &cfg()).unwrap() + dirichlet_logderiv(s, &chi, &cfg()).unwrap();
        prop_assert!((l_logderiv(&p, s, &cfg()).unwrap() - want).norm() < 1e-9);
    }

    #[test]
    fn matches_dirichlet_series_far_right(sigma in 4.0f64..6.0, t in -200.0f64..200.0) {
        let s = Complex64::new(sigma, t);
        let direct: Complex64 = (1..=20_000u32).map(|n| Complex64::new(n as f64, 0.0).powc(-s)).sum();
        prop_assert!((zeta_value(s, &cfg()).unwrap() - direct).norm() < 1e-11);
    }
}
