use criterion::{black_box, criterion_group, criterion_main, Criterion};
use ginv_bench::ore_group;
use ginv_core::fixtures::{run_suite, SuiteConfig};
use ginv_core::invariants::molien_report;
use ginv_core::presentation::{groebner_truncated, rees_weyl, MonomialOrder};
use ginv_core::reflection::classify_group;
use ginv_core::rootsum::solve;
use ginv_core::RootSumProblem;

fn groebner(c: &mut Criterion) {
    let p = rees_weyl(2).unwrap();
    let order = MonomialOrder::deglex(p.num_generators());
    c.bench_function("groebner rees_weyl(2) to degree 8", |b| {
        b.iter(|| groebner_truncated(black_box(&p), &order, 8).unwrap())
    });
}

fn molien(c: &mut Criterion) {
    let (a, g) = ore_group(12).unwrap();
    c.bench_function("classify and Molien, order-4 group, degree 12", |b| {
        b.iter(|| {
            let classes = classify_group(&a, &g, 10_000).unwrap();
            molien_report(&a, &g, &classes).unwrap()
        })
    });
}

fn rootsum(c: &mut Criterion) {
    let p = RootSumProblem::new(1, 5).excluding(true, true);
    c.bench_function("rootsum target 1 count 5 with exclusions", |b| b.iter(|| solve(black_box(&p)).unwrap()));
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("fixtures");
    group.sample_size(10);
    group.bench_function("full suite at degree 12", |b| b.iter(|| run_suite(&SuiteConfig::default())));
    group.finish();
}

criterion_group!(benches, groebner, molien, rootsum, suite);
criterion_main!(benches);
