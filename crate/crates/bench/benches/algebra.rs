use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use tvartop_bench::fixture_fan;
use tvartop_core::chow::{hilbert_function, presentation, ChowRing};
use tvartop_core::exactla::{smith_normal_form, QMatrix, ZMatrix};
use tvartop_core::pi1::{fundamental_group, NdReading};
use tvartop_core::random::{complete_plane_fan, int_matrix, product_with_line, rng};

fn snf(c: &mut Criterion) {
    let mut r = rng(1);
    let mats: Vec<Vec<Vec<i64>>> = (0..64).map(|_| int_matrix(&mut r, 4, 4, 5)).collect();
    c.bench_function("smith_normal_form 4x4", |b| {
        b.iter(|| {
            for m in &mats {
                let refs: Vec<&[i64]> = m.iter().map(|v| v.as_slice()).collect();
                black_box(smith_normal_form(&ZMatrix::from_i64(&refs)));
            }
        })
    });
    c.bench_function("rational rref 8x8", |b| {
        let m: Vec<Vec<i64>> = int_matrix(&mut rng(2), 8, 8, 9);
        let refs: Vec<&[i64]> = m.iter().map(|v| v.as_slice()).collect();
        let q = QMatrix::from_i64(&refs);
        b.iter(|| black_box(q.rank()))
    });
}

fn chow(c: &mut Criterion) {
    let f2 = fixture_fan("f2");
    c.bench_function("hilbert F2", |b| b.iter(|| black_box(hilbert_function(&f2, 3).unwrap())));
    let s = product_with_line(&complete_plane_fan(&mut rng(3), 6)).unwrap();
    c.bench_function("presentation P1 x surface", |b| b.iter(|| black_box(presentation(&s).unwrap())));
    c.bench_function("chow ring P1 x surface", |b| {
        b.iter_batched(|| presentation(&s).unwrap(), |p| black_box(ChowRing::new(p, 3).unwrap()), BatchSize::SmallInput)
    });
}

fn pi1(c: &mut Criterion) {
    let t = fixture_fan("torsion");
    c.bench_function("fundamental_group torsion", |b| {
        b.iter(|| black_box(fundamental_group(&t, NdReading::AllPoints, true)))
    });
}

criterion_group!(benches, snf, chow, pi1);
criterion_main!(benches);
