use slb_core::bounds::{bound_case, family_cor10, zeta_cor9, BoundParameters, CaseTag};
use slb_core::selberg::{zeta, EvaluationPoint};

fn cor10_params() -> BoundParameters {
    BoundParameters {
        alpha: 1.278,
        alpha1: 1.3,
        nu1: 3.049,
        nu2: 1.244,
        log_log_tau0: Some(13.0),
        t0: Some(2001.0),
        ..Default::default()
    }
}

#[test]
fn case1_dominated_by_cor10() {
    let z = zeta();
    let p = cor10_params();
    let mut worst: (f64, f64) = (f64::MIN, f64::MIN);
    for i in 0..20 {
        let sigma = 0.6 + (0.999 - 0.6) * i as f64 / 19.0;
        for j in 0..20 {
            let ll = 13.0 + j as f64 / 19.0;
            let pt = EvaluationPoint::from_log_log_tau(sigma, ll).unwrap();
            let (ld, lg) = bound_case(&z, &pt, &p, CaseTag::Case1).unwrap();
            let c = family_cor10(&z, &pt).unwrap();
            worst.0 = worst.0.max(ld.value / c.log_deriv.value);
            worst.1 = worst.1.max(lg.value / c.log_l.value);
            assert!(ld.value <= c.log_deriv.value, "logDeriv σ={sigma} LL={ll}: {} > {}", ld.value, c.log_deriv.value);
            assert!(lg.value <= c.log_l.value, "logL σ={sigma} LL={ll}: {} > {}", lg.value, c.log_l.value);
        }
    }
    assert!(worst.0 < 1.0 && worst.1 < 1.0);
}

#[test]
fn case1_against_cor9() {
    let z = zeta();
    let t: f64 = 1e6;
    let p = BoundParameters { alpha1: 1.0, log_log_tau0: Some(t.ln().ln()), t0: Some(t), ..Default::default() };
    for sigma in [0.75, 0.9, 0.95, 0.99] {
        let pt = EvaluationPoint::new(&z, sigma, t).unwrap();
        let (ld, lg) = bound_case(&z, &pt, &p, CaseTag::Case1).unwrap();
        let (cd, cl) = zeta_cor9(sigma, t).unwrap();
        // identical leading summands, the rest is rounded upward in the corollary
        for k in 0..2 {
            assert!((ld.terms[k].value - cd.terms[k].value).abs() < 1e-12);
            assert!((lg.terms[k].value - cl.terms[k].value).abs() < 1e-12);
        }
        assert!(ld.value <= cd.value, "σ={sigma}: {} > {}", ld.value, cd.value);
        if cd.certified {
            assert!(lg.value <= cl.value, "σ={sigma}: {} > {}", lg.value, cl.value);
        }
    }
}
