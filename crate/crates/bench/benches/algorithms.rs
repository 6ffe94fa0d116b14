use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use matchext::classify;
use matchext::connectivity::{self, Caps};
use matchext::matching;
use matchext::symmetry;

use matchext_bench::{big_gp, big_ring, dense_circulant, dodecahedron, petersen};

fn bench_matching(c: &mut Criterion) {
    let gp = big_gp();
    c.bench_function("max_matching/gp12-2", |b| {
        b.iter(|| matching::max_matching(black_box(&gp)))
    });
    let dense = dense_circulant();
    c.bench_function("max_matching/circulant24", |b| {
        b.iter(|| matching::max_matching(black_box(&dense)))
    });
}

fn bench_extendability(c: &mut Criterion) {
    let p = petersen();
    c.bench_function("is_2_extendable/petersen", |b| {
        b.iter(|| matching::is_k_extendable(black_box(&p), 2).unwrap())
    });
    let gp = big_gp();
    c.bench_function("is_2_extendable/gp12-2", |b| {
        b.iter(|| matching::is_k_extendable(black_box(&gp), 2).unwrap())
    });
}

fn bench_cyclic_connectivity(c: &mut Criterion) {
    let caps = Caps::default();
    let d = dodecahedron();
    c.bench_function("cyclic_edge_connectivity/dodecahedron", |b| {
        b.iter(|| connectivity::cyclic_edge_connectivity(black_box(&d), &caps).unwrap())
    });
    let ring = big_ring();
    c.bench_function("is_super_cyclic/ring6", |b| {
        b.iter(|| connectivity::is_super_cyclic(black_box(&ring), &caps).unwrap())
    });
}

fn bench_symmetry(c: &mut Criterion) {
    let d = dodecahedron();
    let relabeled = d.relabel(&[7, 2, 14, 9, 0, 11, 4, 18, 6, 13, 1, 16, 3, 10, 19, 5, 12, 17, 8, 15]);
    c.bench_function("is_isomorphic/dodecahedron", |b| {
        b.iter(|| symmetry::is_isomorphic(black_box(&d), black_box(&relabeled)))
    });
    c.bench_function("vertex_orbits/dodecahedron", |b| {
        b.iter(|| symmetry::vertex_orbits(black_box(&d)))
    });
}

fn bench_classification(c: &mut Criterion) {
    let caps = Caps::default();
    let p = petersen();
    c.bench_function("cross_validate/petersen", |b| {
        b.iter(|| classify::cross_validate(black_box(&p), &caps).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_matching, bench_extendability, bench_cyclic_connectivity, bench_symmetry, bench_classification
}
criterion_main!(benches);
