//! Deterministic structured graphs (the DIMACS Hamming and Johnson families)
//! and small seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{CsrGraph, Vertex};

const MAX_HAMMING_BITS: u32 = 20;
const MAX_JOHNSON_SET: u32 = 16;

/// Graph on all `2^len` bit strings, with an edge between two strings whose
/// Hamming distance is at least `min_dist`.
pub fn generate_hamming(len: u32, min_dist: u32) -> Result<CsrGraph> {
    if !(1 <= min_dist && min_dist <= len && len <= MAX_HAMMING_BITS) {
        return Err(Error::InvalidParameter(format!(
            "hamming requires 1 <= min_dist <= len <= {MAX_HAMMING_BITS}, got len={len}, min_dist={min_dist}"
        )));
    }
    let words: Vec<u32> = (0..1u32 << len).collect();
    Ok(distance_graph(&words, min_dist))
}

/// Graph on all weight-`w` bit strings of length `n_set` (in ascending numeric
/// order), with an edge between two strings at Hamming distance `>= min_dist`.
pub fn generate_johnson(n_set: u32, w: u32, min_dist: u32) -> Result<CsrGraph> {
    if !(w <= n_set && n_set <= MAX_JOHNSON_SET && 1 <= min_dist && min_dist <= n_set) {
        return Err(Error::InvalidParameter(format!(
            "johnson requires w <= n_set <= {MAX_JOHNSON_SET} and 1 <= min_dist <= n_set, \
             got n_set={n_set}, w={w}, min_dist={min_dist}"
        )));
    }
    let words: Vec<u32> = (0..1u32 << n_set).filter(|x| x.count_ones() == w).collect();
    Ok(distance_graph(&words, min_dist))
}

fn distance_graph(words: &[u32], min_dist: u32) -> CsrGraph {
    let adjacency = words
        .iter()
        .map(|&x| {
            words
                .iter()
                .enumerate()
                .filter(|&(_, &y)| (x ^ y).count_ones() >= min_dist)
                .map(|(j, _)| j as Vertex)
                .collect()
        })
        .collect();
    CsrGraph::from_sorted_adjacency(adjacency)
}

/// Erdős–Rényi `G(n, p)`: each of the `n(n-1)/2` pairs is an edge independently
/// with probability `p`. Fully determined by `seed`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> CsrGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacency = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                adjacency[u].push(v as Vertex);
                adjacency[v].push(u as Vertex);
            }
        }
    }
    CsrGraph::from_sorted_adjacency(adjacency)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> CsrGraph {
    let adjacency = (0..n)
        .map(|u| (0..n).filter(|&v| v != u).map(|v| v as Vertex).collect())
        .collect();
    CsrGraph::from_sorted_adjacency(adjacency)
}

/// Cycle `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> CsrGraph {
    let edges: Vec<_> = (0..n)
        .map(|i| (i as Vertex, ((i + 1) % n) as Vertex))
        .collect();
    CsrGraph::from_edges(n, &edges).expect("cycle endpoints are in range")
}
