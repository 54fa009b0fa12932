use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use z2z4::search::{search, SearchOptions};
use z2z4::{classify, dual, gleason_decompose, span, WeightEnumerator};
use z2z4_bench::fixtures;

fn bench_codes(c: &mut Criterion) {
    let fixtures = fixtures();
    let mut group = c.benchmark_group("code");
    for f in &fixtures {
        group.bench_with_input(BenchmarkId::new("span", &f.name), &f.code, |b, code| {
            b.iter(|| span(black_box(code.generators())).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("dual", &f.name), &f.code, |b, code| {
            b.iter(|| dual(black_box(code)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("classify", &f.name), &f.code, |b, code| {
            b.iter(|| classify(black_box(code)))
        });
        let w = WeightEnumerator::of_code(&f.code);
        let cls = classify(&f.code);
        group.bench_with_input(BenchmarkId::new("gleason", &f.name), &w, |b, w| {
            b.iter(|| gleason_decompose(black_box(w), cls).unwrap())
        });
    }
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    for (alpha, beta) in [(2, 2), (4, 3), (6, 2)] {
        group.bench_function(format!("{alpha}x{beta}"), |b| {
            b.iter(|| search(alpha, beta, SearchOptions::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_codes, bench_search);
criterion_main!(benches);
