use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Parameters for a Watts–Strogatz style small-world graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallWorldSpec {
    pub n: usize,
    /// Lattice neighbours per node; even, `0 < k < n`.
    pub k: usize,
    /// Rewiring probability per lattice edge.
    pub p: f64,
    pub seed: u64,
}

impl SmallWorldSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::BadSpec(format!(
                "n must be at least 3, got {}",
                self.n
            )));
        }
        if self.k == 0 || !self.k.is_multiple_of(2) || self.k >= self.n {
            return Err(Error::BadSpec(format!(
                "k must be even with 0 < k < n, got k={} n={}",
                self.k, self.n
            )));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::BadSpec(format!(
                "p must lie in [0, 1], got {}",
                self.p
            )));
        }
        Ok(())
    }
}

/// Lattice edges `(i, i + j mod n)` for `j` in `1..=k/2`, `j` outermost.
fn lattice_edges(n: usize, k: usize) -> Vec<(usize, usize)> {
    (1..=k / 2)
        .flat_map(|j| (0..n).map(move |i| (i, (i + j) % n)))
        .collect()
}

pub fn ring_lattice(n: usize, k: usize) -> Result<Graph> {
    generate_small_world(&SmallWorldSpec {
        n,
        k,
        p: 0.0,
        seed: 0,
    })
}

/// Ring lattice with every lattice edge rewired with probability `p`.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)`. Edges are
/// visited in lattice order (`j` outer, `i` inner); a rewired edge keeps
/// endpoint `i` and moves its other end to a uniformly drawn node that is
/// neither `i` nor already adjacent to it (rejection sampling). Nodes
/// already joined to every other node keep their edge. The edge count is
/// always `n * k / 2`.
pub fn generate_small_world(spec: &SmallWorldSpec) -> Result<Graph> {
    spec.validate()?;
    let SmallWorldSpec { n, k, p, seed } = *spec;
    let mut adj = vec![BTreeSet::new(); n];
    let edges = lattice_edges(n, k);
    for &(u, v) in &edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    if p > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for &(u, v) in &edges {
            if !rng.random_bool(p) || adj[u].len() >= n - 1 {
                continue;
            }
            let w = loop {
                let w = rng.random_range(0..n);
                if w != u && !adj[u].contains(&w) {
                    break w;
                }
            };
            adj[u].remove(&v);
            adj[v].remove(&u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }
    Ok(Graph::from_sets(adj, edges.len()))
}
