use covseq_bench::pseudo_random;
use covseq_core::verify::{covering_radius, is_covering_sequence_with, VerifyLimits};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn ball_marking(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_covering_sequence");
    for &(n, r, len) in &[(12usize, 1usize, 600usize), (16, 1, 4462), (20, 1, 60_000)] {
        let s = pseudo_random(len, 7);
        for (label, limits) in [
            ("parallel", VerifyLimits::default()),
            ("sequential", VerifyLimits::default().sequential()),
        ] {
            group.bench_with_input(BenchmarkId::new(label, format!("n{n}r{r}len{len}")), &s, |b, s| {
                b.iter(|| is_covering_sequence_with(s, n, r, &limits).unwrap())
            });
        }
    }
    group.finish();
}

fn radius(c: &mut Criterion) {
    let s = pseudo_random(2000, 11);
    c.bench_function("covering_radius n16", |b| b.iter(|| covering_radius(&s, 16).unwrap()));
}

criterion_group!(benches, ball_marking, radius);
criterion_main!(benches);
