//! Shared helpers and independent oracles for the integration suites.
#![allow(dead_code)] // each test binary uses a different subset

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::Rng;

use lapsnf::{enumerate_connected, invariant_factors, Graph};

pub fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Independent enumeration oracle: iterate every labeled graph on `n`
/// vertices, keep the connected ones, and deduplicate by canonical form.
pub fn labeled_dedup_classes(n: usize) -> BTreeSet<u64> {
    let bits = n * (n - 1) / 2;
    let mut classes = BTreeSet::new();
    for mask in 0u64..(1 << bits) {
        let g = Graph::from_edge_mask(n, mask).unwrap();
        if g.is_connected() {
            classes.insert(g.canonical_form().unwrap());
        }
    }
    classes
}

pub fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
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

pub fn random_connected_graph(rng: &mut StdRng, n: usize) -> Graph {
    loop {
        let g = random_graph(rng, n);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

type FactoredClasses = Vec<(Graph, Vec<BigInt>)>;

/// Connected classes of each order with their invariant factors, shared
/// across criteria so the big sweeps run once per binary.
pub fn classes_with_factors(n: usize) -> &'static [(Graph, Vec<BigInt>)] {
    static CACHE: [OnceLock<FactoredClasses>; 9] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    CACHE[n - 1].get_or_init(|| {
        use rayon::prelude::*;
        enumerate_connected(n)
            .unwrap()
            .into_par_iter()
            .map(|g| {
                let factors = invariant_factors(&g.laplacian());
                (g, factors)
            })
            .collect()
    })
}
