use num_complex::Complex64;
use slb_core::arithmetic::build_tables;
use slb_core::explicit::{guinand_weil_residual, selberg_rhs, zero_sum, MajorantSpec};
use slb_core::lfunc::{load_zeros, ZeroDataset};
use slb_core::selberg::{builtin, zeta, Builtin};
use std::path::PathBuf;

fn zeros() -> ZeroDataset {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/zeros1e5.txt");
    load_zeros(p).unwrap()
}

#[test]
fn sum_of_reciprocals() {
    let ds = zeros();
    let z = zero_sum(&ds, 0.5, 0.0).unwrap();
    println!("{z:?}");
    assert!((0.02307..=0.02312).contains(&z.truncated));
    let oracle = 1.0 + 0.577_215_664_901_532_9 / 2.0 - 0.5 * (4.0 * std::f64::consts::PI).ln();
    assert!((z.truncated + z.tail_estimate / 2.0 - oracle).abs() < 2e-6);
}

#[test]
fn selberg_identity() {
    let ds = zeros().up_to(7.0e4).unwrap();
    let r = selberg_rhs(&zeta(), Complex64::new(1.5, 1000.0), 10.0, 10.0, &ds).unwrap();
    println!("{r:?}");
    assert!(r.residual < 1e-3);
    let real = selberg_rhs(&zeta(), Complex64::new(0.3, 0.0), 3.0, 3.0, &ds).unwrap();
    println!("{real:?}");
    assert!(real.residual < 1e-3);
    let mut last = f64::INFINITY;
    for h in [1.75e4, 3.5e4, 7.0e4] {
        let r = selberg_rhs(&zeta(), Complex64::new(0.8, 500.0), 5.0, 4.0, &zeros().up_to(h).unwrap()).unwrap();
        println!("{h} {}", r.residual);
        assert!(r.residual < last);
        last = r.residual;
    }
}

#[test]
fn guinand_weil() {
    let ds = zeros().up_to(7.0e4).unwrap();
    let spec = MajorantSpec::new(0.25, 1.0).unwrap();
    let tables = build_tables(&zeta(), 1000).unwrap();
    let r = guinand_weil_residual(&zeta(), &spec, 100.0, &ds, &tables).unwrap();
    println!("{r:?}");
    assert!(r.residual < 1e-2);
    let prod = builtin(&Builtin::parse("product(zeta)").unwrap()).unwrap();
    let p = guinand_weil_residual(&prod, &spec, 100.0, &ds, &tables).unwrap();
    assert_eq!(p.residual, r.residual);
}
