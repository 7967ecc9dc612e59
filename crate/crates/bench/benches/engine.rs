use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gutsbound::{
    lobachevsky, minimum_positive_bound, validate_side, witness_sides, Angle, LabelQuadruple,
};

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for max in [5u32, 10] {
        group.bench_function(format!("label_max_{max}"), |b| {
            b.iter(|| minimum_positive_bound(black_box(max)).unwrap())
        });
    }
    group.finish();
}

fn validation(c: &mut Criterion) {
    let q = LabelQuadruple::from_values([2, 3, 5, 7]).unwrap();
    let shapes: Vec<_> = witness_sides(&q)
        .into_iter()
        .map(|s| s.shape().clone())
        .collect();
    c.bench_function("validate_witnesses", |b| {
        b.iter(|| {
            for s in &shapes {
                black_box(validate_side(s, black_box(&q)));
            }
        })
    });
}

fn numerics(c: &mut Criterion) {
    let theta = Angle::new(std::f64::consts::FRAC_PI_4).unwrap();
    c.bench_function("lobachevsky_pi_4", |b| {
        b.iter(|| lobachevsky(black_box(theta), 1e-12).unwrap())
    });
}

criterion_group!(benches, sweep, validation, numerics);
criterion_main!(benches);
