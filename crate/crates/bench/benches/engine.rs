use criterion::{black_box, criterion_group, criterion_main, Criterion};

use grirr_bench::{
    cyclic4, dependent_matrix, four_generator_primary, m_primary_three_variables, points,
};
use grirr_core::artinian::socle;
use grirr_core::gradedfield::graded_free_basis;
use grirr_core::groebner::buchberger;
use grirr_core::harness::{ideal_of_points, theorem51_check};
use grirr_core::ring::{GradingMap, MonomialOrder};
use grirr_core::star::star;

fn groebner(c: &mut Criterion) {
    let ideal = cyclic4();
    let mut group = c.benchmark_group("buchberger");
    for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
        group.bench_function(format!("cyclic4 {order:?}"), |b| {
            b.iter(|| buchberger(ideal.ring(), black_box(ideal.generators()), order))
        });
    }
    group.finish();
}

fn star_of_points(c: &mut Criterion) {
    let mut group = c.benchmark_group("star");
    for n in [3, 5] {
        let ideal = ideal_of_points(&points(n)).unwrap();
        group.bench_function(format!("{n} points"), |b| {
            b.iter(|| star(black_box(&ideal), &GradingMap::standard(2)).unwrap())
        });
    }
    let i = four_generator_primary();
    group.bench_function("fine grading", |b| {
        b.iter(|| star(black_box(&i), &GradingMap::fine(2)).unwrap())
    });
    group.sample_size(10);
    group.bench_function("theorem check, 5 points", |b| {
        let config = points(5);
        b.iter(|| theorem51_check(black_box(&config)).unwrap())
    });
    group.finish();
}

fn socles(c: &mut Criterion) {
    let mut group = c.benchmark_group("socle");
    // fresh ideals each iteration, since bases are cached per ideal
    group.bench_function("two variables", |b| {
        b.iter(|| socle(&four_generator_primary()).unwrap())
    });
    group.bench_function("three variables", |b| {
        b.iter(|| socle(&m_primary_three_variables()).unwrap())
    });
    group.finish();
}

fn graded_elimination(c: &mut Criterion) {
    let a = dependent_matrix();
    c.bench_function("graded free basis 4x4", |b| {
        b.iter(|| graded_free_basis(black_box(&a)).unwrap())
    });
}

criterion_group!(
    benches,
    groebner,
    star_of_points,
    socles,
    graded_elimination
);
criterion_main!(benches);
