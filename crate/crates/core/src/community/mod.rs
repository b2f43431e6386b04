//! Overlapping community detection by clique percolation over a bounded set
//! of maximal cliques.
//!
//! Instead of enumerating every maximal clique, each vertex contributes one
//! greedy max-degree clique plus `c` randomized ones. Cliques of size `>= k`
//! are compared through their pairwise overlap matrix; two cliques are linked
//! when they share at least `k - 1` vertices, and each connected group of
//! linked cliques yields one community (the union of its cliques).

mod omega;

pub use omega::{covers_from_labeled, omega_index, parse_communities, parse_memberships, Cover};

use std::collections::HashSet;
use std::io::Write;

use petgraph::unionfind::UnionFind;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{intersect_sorted, CsrGraph, Vertex};
use crate::heuristic::{select, SelectionPolicy};
use crate::oracle::enumerate_maximal_cliques;
use crate::seed::derived_rng;

/// A collection of cliques, each stored as an ascending vertex list.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CliqueSet {
    cliques: Vec<Vec<Vertex>>,
}

impl CliqueSet {
    pub fn new(mut cliques: Vec<Vec<Vertex>>) -> Self {
        cliques.iter_mut().for_each(|c| c.sort_unstable());
        Self { cliques }
    }

    pub fn cliques(&self) -> &[Vec<Vertex>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn into_inner(self) -> Vec<Vec<Vertex>> {
        self.cliques
    }
}

/// Dense symmetric matrix of clique intersection sizes; the diagonal holds
/// the clique sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapMatrix {
    dim: usize,
    entries: Vec<u32>,
}

impl OverlapMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim + j]
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommunitySet {
    /// Ascending vertex lists, ordered by size (descending) then lexicographically.
    pub communities: Vec<Vec<Vertex>>,
    /// Vertices belonging to two or more communities.
    pub shared_nodes: usize,
}

impl CommunitySet {
    fn from_components(cliques: &[Vec<Vertex>], components: &[Vec<usize>]) -> Self {
        let mut communities: Vec<Vec<Vertex>> = components
            .iter()
            .map(|component| {
                let mut members: Vec<Vertex> = component
                    .iter()
                    .flat_map(|&i| cliques[i].iter().copied())
                    .collect();
                members.sort_unstable();
                members.dedup();
                members
            })
            .collect();
        // Size descending, then lexicographic (smallest member first).
        communities.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));

        let mut count = std::collections::HashMap::<Vertex, usize>::new();
        for &v in communities.iter().flatten() {
            *count.entry(v).or_default() += 1;
        }
        let shared_nodes = count.values().filter(|&&c| c >= 2).count();
        Self {
            communities,
            shared_nodes,
        }
    }

    pub fn len(&self) -> usize {
        self.communities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.communities.is_empty()
    }

    /// Node-to-community memberships over `n` nodes.
    pub fn to_cover(&self, n: usize) -> Result<Cover> {
        Cover::from_communities(n, &self.communities)
    }

    /// One community per line, members written as their labels.
    pub fn write<W: Write>(&self, labels: &[u64], mut out: W) -> Result<()> {
        for community in &self.communities {
            let line: Vec<String> = community
                .iter()
                .map(|&v| labels[v as usize].to_string())
                .collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k must be at least 3, got {k}")));
    }
    Ok(())
}

/// Grows a maximal clique from `v`, choosing each next member from the common
/// neighborhood with `rng` (random) or by maximum degree when `rng` is `None`.
fn grow_clique(g: &CsrGraph, v: Vertex, mut rng: Option<&mut ChaCha8Rng>) -> Vec<Vertex> {
    let mut clique = vec![v];
    let mut candidates = g.neighbors(v).to_vec();
    let mut next = Vec::new();
    while !candidates.is_empty() {
        let u = candidates[select(g, &candidates, rng.as_deref_mut())];
        intersect_sorted(&candidates, g.neighbors(u), &mut next);
        std::mem::swap(&mut candidates, &mut next);
        clique.push(u);
    }
    clique.sort_unstable();
    clique
}

/// A maximal clique containing `v`. No global size bound is applied, so the
/// result is always maximal, however small.
pub fn maximal_clique_containing(g: &CsrGraph, v: Vertex, policy: SelectionPolicy) -> Vec<Vertex> {
    let mut rng = policy.rng_for(v as u64, 0);
    grow_clique(g, v, rng.as_mut())
}

/// Collects `n(c + 1)` probes (one max-degree and `c` random maximal cliques
/// per vertex), keeps those with at least `k` members and drops exact
/// duplicates. Probe `j` of vertex `v` has its own random stream, so the
/// result is independent of thread scheduling and the cliques found for `c`
/// are a prefix-stable subset of those found for any larger `c`.
pub fn collect_cliques(g: &CsrGraph, k: usize, c: usize, seed: u64) -> Result<CliqueSet> {
    check_k(k)?;
    let per_vertex: Vec<Vec<Vec<Vertex>>> = (0..g.vertex_count() as Vertex)
        .into_par_iter()
        .map(|v| {
            let mut probes = Vec::with_capacity(c + 1);
            probes.push(grow_clique(g, v, None));
            for j in 1..=c as u64 {
                let mut rng = derived_rng(seed, v as u64, j);
                probes.push(grow_clique(g, v, Some(&mut rng)));
            }
            probes.retain(|clique| clique.len() >= k);
            probes
        })
        .collect();

    let mut seen = HashSet::new();
    let cliques = per_vertex
        .into_iter()
        .flatten()
        .filter(|clique| seen.insert(clique.clone()))
        .collect();
    Ok(CliqueSet { cliques })
}

pub fn overlap_matrix(cs: &CliqueSet) -> OverlapMatrix {
    let dim = cs.len();
    let mut entries = vec![0u32; dim * dim];
    let mut scratch = Vec::new();
    for (i, a) in cs.cliques.iter().enumerate() {
        entries[i * dim + i] = a.len() as u32;
        for (j, b) in cs.cliques.iter().enumerate().skip(i + 1) {
            intersect_sorted(a, b, &mut scratch);
            let shared = scratch.len() as u32;
            entries[i * dim + j] = shared;
            entries[j * dim + i] = shared;
        }
    }
    OverlapMatrix { dim, entries }
}

/// Drops cliques smaller than `k`, links cliques sharing at least `k - 1`
/// vertices and returns the connected groups as ascending clique indices,
/// ordered by their first index.
pub fn threshold_components(m: &OverlapMatrix, k: usize) -> Result<Vec<Vec<usize>>> {
    check_k(k)?;
    let keep: Vec<usize> = (0..m.dim).filter(|&i| m.get(i, i) as usize >= k).collect();
    let mut uf = UnionFind::<usize>::new(m.dim);
    for (a, &i) in keep.iter().enumerate() {
        for &j in &keep[a + 1..] {
            if m.get(i, j) as usize >= k - 1 {
                uf.union(i, j);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot_of_root = std::collections::HashMap::new();
    for &i in &keep {
        let slot = *slot_of_root.entry(uf.find(i)).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[slot].push(i);
    }
    Ok(groups)
}

fn communities_from_cliques(cs: &CliqueSet, k: usize) -> Result<CommunitySet> {
    let matrix = overlap_matrix(cs);
    let components = threshold_components(&matrix, k)?;
    Ok(CommunitySet::from_components(&cs.cliques, &components))
}

/// k-clique communities from the bounded clique collection.
pub fn k_clique_communities(g: &CsrGraph, k: usize, c: usize, seed: u64) -> Result<CommunitySet> {
    let cliques = collect_cliques(g, k, c, seed)?;
    communities_from_cliques(&cliques, k)
}

/// Reference clique percolation seeded with every maximal clique. Subject to
/// the enumeration guards of [`enumerate_maximal_cliques`].
pub fn cpm_oracle(g: &CsrGraph, k: usize) -> Result<CommunitySet> {
    check_k(k)?;
    let mut all = enumerate_maximal_cliques(g)?.into_inner();
    all.retain(|clique| clique.len() >= k);
    communities_from_cliques(&CliqueSet { cliques: all }, k)
}
