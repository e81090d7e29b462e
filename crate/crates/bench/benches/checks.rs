use criterion::{black_box, criterion_group, criterion_main, Criterion};
use multloop_core::exprdsl::parse;
use multloop_core::groupcat::{tangent_algebra, GroupLaw};
use multloop_core::kepka::cases;
use multloop_core::kepka::{connectedness_check, generation_witness, CheckConfig, TOL_FD};
use multloop_core::liealg::catalog;
use multloop_core::loopcore::{axioms_check, LoopGrid, LoopLaw};
use multloop_core::verify::{run_target, RunConfig};

fn lie(c: &mut Criterion) {
    let algs = catalog::defined();
    c.bench_function("jacobi_all_catalog", |b| b.iter(|| algs.iter().all(|a| black_box(a).jacobi_check())));
    let m = catalog::mult3();
    c.bench_function("fingerprint_mult3", |b| b.iter(|| black_box(&m).fingerprint()));
}

fn groups(c: &mut Criterion) {
    let law = GroupLaw::mult4();
    c.bench_function("tangent_algebra_mult4", |b| b.iter(|| tangent_algebra(black_box(&law), TOL_FD).unwrap()));
}

fn kepka(c: &mut Criterion) {
    let case = cases::case(3).unwrap();
    let cfg = CheckConfig::default();
    let p = &case.pairs[0];
    c.bench_function("connectedness_case3", |b| {
        b.iter(|| connectedness_check(&case.law, &p.a, &p.b, &p.subgroup, black_box(&cfg)))
    });
    c.bench_function("generation_case3", |b| {
        b.iter(|| generation_witness(&case.law, &[&p.a, &p.b], 5, black_box(&cfg)).unwrap())
    });
}

fn loops(c: &mut Criterion) {
    let grid = LoopGrid::new(1, "bench", 2.0, 5, 50);
    let a = LoopLaw::family_a(parse("z^2").unwrap()).unwrap();
    c.bench_function("axioms_family_a", |b| b.iter(|| axioms_check(black_box(&a), &grid)));
    let d = LoopLaw::family_d(parse("0.1*x").unwrap()).unwrap();
    let small = LoopGrid::new(1, "bench", 1.0, 3, 10);
    c.bench_function("axioms_family_d_scan", |b| b.iter(|| axioms_check(black_box(&d), &small)));
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("repro_all", |b| b.iter(|| run_target("repro:all", &RunConfig::default()).unwrap()));
    g.finish();
}

criterion_group!(benches, lie, groups, kepka, loops, suite);
criterion_main!(benches);
