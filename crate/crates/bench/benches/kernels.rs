use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;
use slb_core::arithmetic::build_tables;
use slb_core::bounds::{bound_main, BoundParameters};
use slb_core::explicit::{h_hat_quadrature, MajorantSpec};
use slb_core::kernel::a_hat;
use slb_core::lfunc::{zeta_value, EvalConfig};
use slb_core::selberg::{builtin, zeta, Builtin, EvaluationPoint};

fn zeta_em(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let mut g = c.benchmark_group("zeta_value");
    for t in [10.0, 1e3, 1e5] {
        g.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| {
            b.iter(|| zeta_value(black_box(Complex64::new(0.75, t)), &cfg).unwrap())
        });
    }
    g.finish();
}

fn kernels(c: &mut Criterion) {
    c.bench_function("a_hat", |b| b.iter(|| a_hat(black_box(2.0), black_box(1.278), black_box(0.75)).unwrap()));
    let spec = MajorantSpec::new(0.5, 1.0).unwrap();
    c.bench_function("h_hat_quadrature", |b| b.iter(|| h_hat_quadrature(&spec, black_box(0.3)).unwrap()));
}

fn tables(c: &mut Criterion) {
    let desc = builtin(&Builtin::parse("product(zeta,dirichlet(5,2))").unwrap()).unwrap();
    let mut g = c.benchmark_group("build_tables");
    g.sample_size(10);
    g.bench_function("1e6", |b| b.iter(|| build_tables(&desc, black_box(1_000_000)).unwrap()));
    g.finish();
}

fn bounds(c: &mut Criterion) {
    let z = zeta();
    let pt = EvaluationPoint::from_log_log_tau(0.75, 14.0).unwrap();
    let p = BoundParameters::default();
    c.bench_function("bound_main", |b| b.iter(|| bound_main(&z, black_box(&pt), &p)));
}

criterion_group!(benches, zeta_em, kernels, tables, bounds);
criterion_main!(benches);
