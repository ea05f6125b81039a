use covseq_bench::pseudo_random;
use covseq_core::{greedy_merge, SequenceCode};
use criterion::{criterion_group, criterion_main, Criterion};

fn merge(c: &mut Criterion) {
    let words = (0..64).map(|i| pseudo_random(32, i + 1)).collect();
    let code = SequenceCode::new(16, 1, words);
    c.bench_function("greedy_merge 64x32 n16", |b| b.iter(|| greedy_merge(&code).unwrap()));
}

criterion_group!(benches, merge);
criterion_main!(benches);
