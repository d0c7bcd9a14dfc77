//! Deterministic graph generators. Randomness comes from a fixed linear
//! congruential generator so that identical seeds give identical graphs
//! byte-for-byte, across platforms and releases.

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};

/// Linear congruential generator with Knuth's MMIX constants
/// (`x <- 6364136223846793005 x + 1442695040888963407`), returning the high
/// 32 bits of the state.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg {
            state: seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407),
        }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.state >> 32) as u32
    }

    /// Uniform value in `0..bound` (Lemire reduction).
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0 && bound <= u32::MAX as usize);
        ((self.next_u32() as u64 * bound as u64) >> 32) as usize
    }
}

pub fn complete(n: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &pairs).expect("complete graph is valid")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::VertexOutOfRange { vertex: n, n: 3 });
    }
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &pairs)
}

/// Multigraph with `m` uniformly random non-loop edges, parallel edges
/// allowed. Needs `n >= 2` when `m > 0`.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> Result<Multigraph> {
    if n < 2 && m > 0 {
        return Err(Error::VertexOutOfRange { vertex: 1, n });
    }
    let mut rng = Lcg::new(seed);
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.below(n);
        let mut v = rng.below(n - 1);
        if v >= u {
            v += 1;
        }
        pairs.push((u, v));
    }
    Multigraph::from_edge_list(n, &pairs)
}

/// Simple graph where each pair is an edge with probability
/// `density_millis / 1000`.
pub fn random_graph(n: usize, density_millis: usize, rng: &mut Lcg) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(1000) < density_millis {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).expect("generated pairs are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcg_is_reproducible() {
        let mut a = Lcg::new(42);
        let mut b = Lcg::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u32(), b.next_u32());
        }
    }

    #[test]
    fn random_multigraph_is_seed_deterministic() {
        let g1 = random_multigraph(6, 10, 7).unwrap();
        let g2 = random_multigraph(6, 10, 7).unwrap();
        assert_eq!(g1, g2);
        let g3 = random_multigraph(6, 10, 8).unwrap();
        assert_ne!(g1, g3);
        assert_eq!(g1.edge_count(), 10);
    }

    #[test]
    fn generators_produce_expected_shapes() {
        assert_eq!(complete(4).edge_count(), 6);
        assert!(cycle(5).unwrap().is_cycle());
        assert!(cycle(2).is_err());
    }
}
