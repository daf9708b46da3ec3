use proptest::prelude::*;
use slb_core::kernel::{a_hat, coef_a, eta, theta1, theta2};
use slb_core::opt::solve_alpha0;

#[test]
fn alpha0_minimizes_a_hat_on_grid() {
    let a0 = solve_alpha0();
    for m in 1..=5 {
        let m = m as f64;
        for i in 1..=50 {
            let sigma = 0.5 + 0.5 * i as f64 / 51.0;
            let best = a_hat(m, a0, sigma).unwrap();
            for j in 1..=50 {
                let alpha = a0 * j as f64 / 50.0;
                assert!(best <= a_hat(m, alpha, sigma).unwrap() * (1.0 + 1e-12), "m={m} σ={sigma} α={alpha}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn alpha0_minimizes_a_hat(m in 1u32..=5, frac in 0.001f64..1.0, sigma in 0.501f64..0.999) {
        let a0 = solve_alpha0();
        let m = m as f64;
        prop_assert!(a_hat(m, a0, sigma).unwrap() <= a_hat(m, a0 * frac, sigma).unwrap() * (1.0 + 1e-12));
    }

    #[test]
    fn coef_a_elementary_bound(a in 0.1f64..5.0, alpha in 0.05f64..3.0, u in 0.0f64..0.99, sigma in 0.501f64..1.5) {
        let w = 1.0 - u;
        let s = 2.0 * sigma - 1.0;
        let z = 2.0 * alpha * w / s;
        let bound = a / w * s / (2.0 * alpha * w) * z.min(1.0);
        prop_assert!(coef_a(a, alpha, u, sigma).unwrap() <= bound * (1.0 + 1e-12));
    }

    #[test]
    fn thetas_increase(u in 1e-6f64..10.0, du in 1e-4f64..1.0) {
        let v = (u + du).min(10.0);
        prop_assume!(v > u);
        prop_assert!(theta1(v).unwrap() > theta1(u).unwrap());
        prop_assert!(theta2(v).unwrap() > theta2(u).unwrap());
    }

    #[test]
    fn eta_between_half_and_one(alpha in 0.7f64..2.2, sigma in 0.51f64..0.999, ll in 1.0f64..40.0) {
        prop_assume!((2.0 * sigma - 1.0) * ll >= 2.0 * alpha);
        let e = eta(alpha, sigma, ll).unwrap();
        prop_assert!((0.5..=1.0 + 1e-12).contains(&e), "η = {e}");
    }
}
