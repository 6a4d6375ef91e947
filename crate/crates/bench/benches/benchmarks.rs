use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lapsnf::{
    determinantal_divisors, enumerate_connected, invariant_factors, Family, Graph,
};

fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// 3x3 rook's graph: vertex-transitive, so the canonical search gets no help
/// from degree refinement.
fn rook_3x3() -> Graph {
    let mut g = Graph::empty(9).unwrap();
    for a in 0..9 {
        for b in (a + 1)..9 {
            if a / 3 == b / 3 || a % 3 == b % 3 {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

fn bench_snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("snf");
    for n in [8usize, 16, 32] {
        let lap = Family::CompleteMinusEdge.build(n).unwrap().laplacian();
        group.bench_function(format!("complete_minus_edge_{n}"), |b| {
            b.iter(|| invariant_factors(black_box(&lap)))
        });
    }
    let mut rng = StdRng::seed_from_u64(1);
    let lap = random_graph(&mut rng, 16).laplacian();
    group.bench_function("random_16", |b| b.iter(|| invariant_factors(black_box(&lap))));
    group.finish();
}

fn bench_canonical_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    group.bench_function("k9", |b| {
        let g = Graph::complete(9).unwrap();
        b.iter(|| black_box(&g).canonical_form().unwrap())
    });
    group.bench_function("rook_3x3", |b| {
        let g = rook_3x3();
        b.iter(|| black_box(&g).canonical_form().unwrap())
    });
    group.bench_function("random_9", |b| {
        let mut rng = StdRng::seed_from_u64(2);
        let graphs: Vec<Graph> = (0..64).map(|_| random_graph(&mut rng, 9)).collect();
        b.iter(|| {
            for g in &graphs {
                black_box(g.canonical_form().unwrap());
            }
        })
    });
    group.finish();
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_connected");
    group.sample_size(20);
    group.bench_function("n6", |b| b.iter(|| enumerate_connected(6).unwrap().len()));
    group.bench_function("n7", |b| b.iter(|| enumerate_connected(7).unwrap().len()));
    group.finish();
}

fn bench_divisors(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinantal_divisors");
    group.sample_size(20);
    let lap = Family::CompleteMinus2Triangles.build(7).unwrap().laplacian();
    group.bench_function("k7_minus_2c3", |b| {
        b.iter(|| determinantal_divisors(black_box(&lap)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_snf, bench_canonical_form, bench_enumerate, bench_divisors);
criterion_main!(benches);
