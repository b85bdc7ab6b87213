//! Seeded graph corpora shared by the test and verification suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Fixed default seed for reproducible corpora.
pub const DEFAULT_SEED: u64 = 0x5157_2026;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random connected graph with order in `min_n..=max_n`.
pub fn random_connected(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let p = rng.gen_range(0.25..0.75);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).expect("generated graph is simple");
        if g.is_connected() {
            return g;
        }
    }
}

/// Random connected triangle-free graph: candidate edges are inserted in
/// random order, skipping any that would close a triangle.
pub fn random_triangle_free_connected(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let mut pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        // Fisher-Yates
        for i in (1..pairs.len()).rev() {
            let j = rng.gen_range(0..=i);
            pairs.swap(i, j);
        }
        let target = n + rng.gen_range(0..=n / 2);
        let mut adj = vec![vec![false; n]; n];
        let mut edges = Vec::new();
        for (u, v) in pairs {
            if edges.len() >= target {
                break;
            }
            let closes = (0..n).any(|w| adj[u][w] && adj[v][w]);
            if !closes {
                adj[u][v] = true;
                adj[v][u] = true;
                edges.push((u, v));
            }
        }
        let g = Graph::new(n, edges).expect("generated graph is simple");
        if g.is_connected() && g.order() >= min_n {
            return g;
        }
    }
}

/// Named base graphs exercised across the structural suites: cycles,
/// paths and small cliques.
pub fn standard_bases() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in 3..=12 {
        out.push((format!("C{k}"), Graph::cycle(k).unwrap()));
    }
    for k in 2..=6 {
        out.push((format!("P{k}"), Graph::path(k).unwrap()));
    }
    for p in 2..=5 {
        out.push((format!("K{p}"), Graph::complete(p)));
    }
    out
}
