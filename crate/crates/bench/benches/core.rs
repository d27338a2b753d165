use betti_core::survey::{survey_lemma, survey_proposition, survey_theorem};
use betti_core::{es_decompose, fixtures, pure_table, symmetrize, DegreeSequence};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use std::time::Duration;

fn decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("decomposition");
    group.measurement_time(Duration::from_secs(2));
    let pfaffian = fixtures::pfaffian();
    group.bench_function("es_decompose_pfaffian", |b| {
        b.iter(|| es_decompose(black_box(&pfaffian)).unwrap())
    });
    let chain = es_decompose(&pfaffian).unwrap();
    group.bench_function("symmetrize_pfaffian", |b| {
        b.iter(|| symmetrize(black_box(&chain), 12).unwrap())
    });
    let d = DegreeSequence::new(vec![0, 3, 7, 12, 18, 25, 30]).unwrap();
    group.bench_function("pure_table_s6", |b| b.iter(|| pure_table(black_box(&d))));
    group.finish();
}

fn surveys(c: &mut Criterion) {
    let mut group = c.benchmark_group("surveys");
    group.sample_size(10);
    group.bench_function("proposition_s3_12", |b| {
        b.iter(|| survey_proposition(3, 12))
    });
    group.bench_function("lemma_s4_10", |b| b.iter(|| survey_lemma(4, 10)));
    group.bench_function("theorem_s3_12_100", |b| {
        b.iter(|| survey_theorem(3, 12, 100, 0))
    });
    group.finish();
}

criterion_group!(benches, decomposition, surveys);
criterion_main!(benches);
