use std::sync::Arc;

use alcove_core::modular::{qdim, s_matrix};
use alcove_core::weyl::make_context;
use alcove_core::{build_root_system, FusionEngine, Weight};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn ctx(t: &str, l: u64) -> alcove_core::AlcoveContext {
    make_context(Arc::new(build_root_system(t.parse().unwrap()).unwrap()), l).unwrap()
}

fn fold(c: &mut Criterion) {
    let g2 = ctx("G2", 13);
    let weights: Vec<Weight> = (-30..30)
        .flat_map(|a| (-30..30).map(move |b| Weight::from([a, b])))
        .collect();
    c.bench_function("fold G2 l=13, 3600 weights", |b| {
        b.iter(|| {
            for w in &weights {
                black_box(g2.fold(w).unwrap());
            }
        })
    });
}

fn fusion(c: &mut Criterion) {
    c.bench_function("fusion table A2 l=9", |b| {
        b.iter(|| FusionEngine::new(ctx("A2", 9)).full_table().unwrap())
    });
    c.bench_function("fusion table B2 l=12", |b| {
        b.iter(|| FusionEngine::new(ctx("B2", 12)).full_table().unwrap())
    });
}

fn modular(c: &mut Criterion) {
    let a2 = ctx("A2", 12);
    c.bench_function("S-matrix A2 l=12", |b| b.iter(|| s_matrix(&a2).unwrap()));
    let c3 = ctx("C3", 15);
    let alcove = c3.alcove_weights();
    c.bench_function("qdim over the C3 l=15 alcove", |b| {
        b.iter(|| {
            for w in &alcove {
                black_box(qdim(&c3, w).unwrap());
            }
        })
    });
}

criterion_group!(benches, fold, fusion, modular);
criterion_main!(benches);
