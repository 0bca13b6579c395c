#![allow(dead_code)]

use std::collections::VecDeque;

use lmdim::gallery::{complete, cycle, path, random_connected};
use lmdim::{Graph, ProductSpec, VertexSubset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph with `lo..=hi` vertices and a random edge density.
pub fn random_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.0..0.6);
    random_connected(n, p, rng)
}

pub fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSubset {
    loop {
        let members: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        if !members.is_empty() {
            return VertexSubset::new(members, n).unwrap();
        }
    }
}

pub fn random_spec(rng: &mut ChaCha8Rng, max_g: usize, max_h: usize) -> ProductSpec {
    let g = random_graph(rng, 1, max_g);
    let h = random_graph(rng, 1, max_h);
    let u = random_subset(rng, g.order());
    ProductSpec::new(g, u, h).unwrap()
}

/// Hop distances from `s`, computed without the library.
pub fn bfs(g: &Graph, s: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); g.order()];
    for &(a, b) in g.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut d = vec![usize::MAX; g.order()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if d[v] == usize::MAX {
                d[v] = d[u] + 1;
                q.push_back(v);
            }
        }
    }
    d
}

/// P₂, P₃, P₄, C₃, C₄, C₅, K₄ with display names.
pub fn small_factors() -> Vec<(&'static str, Graph)> {
    vec![
        ("P2", path(2).unwrap()),
        ("P3", path(3).unwrap()),
        ("P4", path(4).unwrap()),
        ("C3", cycle(3).unwrap()),
        ("C4", cycle(4).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("K4", complete(4).unwrap()),
    ]
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}
