//! Greedy maximum clique heuristic.
//!
//! Same root loop as the exact search (minus the order test), but instead of
//! branching on every candidate the clique is grown along a single path: at
//! each step one vertex of `U` is chosen, by maximum degree in the input graph
//! or uniformly at random, and `U` shrinks to its degree-filtered
//! neighborhood. Each root costs `O(Δ²)`, so a full run is `O(n·Δ²)`.

use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bound::{Bound, LocalBound};
use crate::graph::{CsrGraph, Vertex};
use crate::result::{CliqueResult, PruningStats};
use crate::seed::derived_rng;

/// How the next clique member is picked from the candidate set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionPolicy {
    /// Candidate of largest degree in the input graph; ties go to the lowest id.
    MaxDegree,
    /// Uniformly random candidate. Each root vertex draws from its own stream
    /// derived from `seed`, so runs are reproducible.
    RandomNeighbor { seed: u64 },
}

impl SelectionPolicy {
    pub(crate) fn rng_for(&self, stream: u64, index: u64) -> Option<ChaCha8Rng> {
        match *self {
            SelectionPolicy::MaxDegree => None,
            SelectionPolicy::RandomNeighbor { seed } => Some(derived_rng(seed, stream, index)),
        }
    }
}

/// Picks a position in `candidates` (non-empty, sorted by id).
pub(crate) fn select(g: &CsrGraph, candidates: &[Vertex], rng: Option<&mut ChaCha8Rng>) -> usize {
    match rng {
        Some(rng) => rng.gen_range(0..candidates.len()),
        None => {
            let mut best = 0;
            for (i, &u) in candidates.iter().enumerate().skip(1) {
                // Strict comparison keeps the lowest id among equal degrees.
                if g.degree(u) > g.degree(candidates[best]) {
                    best = i;
                }
            }
            best
        }
    }
}

/// Runs the heuristic over all vertices in ascending id order.
///
/// The result is a valid clique no larger than the clique number. `p2` and
/// `p4` are always zero: the heuristic has no order test and no branching.
pub fn max_clique_heuristic(g: &CsrGraph, policy: SelectionPolicy) -> CliqueResult {
    let start = Instant::now();
    let bound = LocalBound::new(0);
    let mut search = HeuristicSearch::new(g, &bound, policy);
    g.vertices().for_each(|v| search.root(v));
    let (stats, roots) = (search.stats, search.roots_expanded);
    let (size, members) = bound.into_parts();
    CliqueResult::from_bound(size, members, stats, roots, start.elapsed())
}

pub(crate) struct HeuristicSearch<'a, B> {
    graph: &'a CsrGraph,
    bound: &'a B,
    policy: SelectionPolicy,
    candidates: Vec<Vertex>,
    next: Vec<Vertex>,
    clique: Vec<Vertex>,
    pub(crate) stats: PruningStats,
    pub(crate) roots_expanded: u64,
}

impl<'a, B: Bound> HeuristicSearch<'a, B> {
    pub(crate) fn new(graph: &'a CsrGraph, bound: &'a B, policy: SelectionPolicy) -> Self {
        Self {
            graph,
            bound,
            policy,
            candidates: Vec::new(),
            next: Vec::new(),
            clique: Vec::new(),
            stats: PruningStats::default(),
            roots_expanded: 0,
        }
    }

    pub(crate) fn root(&mut self, v: Vertex) {
        let g = self.graph;
        let max = self.bound.current();
        if g.degree(v) < max {
            self.stats.p1 += 1;
            return;
        }
        self.roots_expanded += 1;
        self.candidates.clear();
        for &w in g.neighbors(v) {
            if g.degree(w) < max {
                self.stats.p3 += 1;
            } else {
                self.candidates.push(w);
            }
        }
        let mut rng = self.policy.rng_for(v as u64, 0);
        self.clique.clear();
        self.clique.push(v);
        while !self.candidates.is_empty() {
            let pick = select(g, &self.candidates, rng.as_mut());
            let u = self.candidates.remove(pick);
            let max = self.bound.current();
            self.next.clear();
            let mut j = 0;
            for &w in g.neighbors(u) {
                if g.degree(w) < max {
                    self.stats.p5 += 1;
                    continue;
                }
                while j < self.candidates.len() && self.candidates[j] < w {
                    j += 1;
                }
                if j < self.candidates.len() && self.candidates[j] == w {
                    self.next.push(w);
                    j += 1;
                }
            }
            std::mem::swap(&mut self.candidates, &mut self.next);
            self.clique.push(u);
        }
        self.bound.offer(&self.clique);
    }
}
