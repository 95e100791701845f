//! Seeded instance families for the benchmarks.

use hymis::Hypergraph;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `m` edges over `n` vertices, sizes uniform in `sizes`.
pub fn random_hypergraph(seed: u64, n: usize, m: usize, sizes: (usize, usize)) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<Vec<u32>> = (0..m)
        .map(|_| {
            let k = rng.gen_range(sizes.0..=sizes.1).min(n);
            sample(&mut rng, n, k).iter().map(|i| i as u32 + 1).collect()
        })
        .collect();
    Hypergraph::from_edges(n, edges).unwrap()
}

/// Stars with up to 20 leaves, split into edges of a center and 1..=3 leaves.
pub fn star_forest(seed: u64, n: usize) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n as u32;
    let mut edges = Vec::new();
    let mut next = 1;
    while next <= n {
        let center = next;
        next += 1;
        let mut leaves = rng.gen_range(1..=20).min(n + 1 - next);
        while leaves > 0 {
            let k = rng.gen_range(1..=3).min(leaves);
            let mut edge = vec![center];
            edge.extend(next..next + k);
            next += k;
            leaves -= k;
            edges.push(edge);
        }
    }
    Hypergraph::from_edges(n as usize, edges).unwrap()
}
