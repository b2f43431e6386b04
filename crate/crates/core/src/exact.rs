//! Exact maximum clique search with hierarchical pruning.
//!
//! For every root vertex `v` the search builds the candidate set `U` of later
//! neighbors and recursively extends `{v}` by candidates, discarding vertices
//! and subtrees that cannot beat the incumbent:
//!
//! * P1: roots with `d(v) < max` are skipped.
//! * P2: neighbors that come earlier in the iteration order are skipped, since
//!   their cliques were already explored from their own root.
//! * P3: neighbors with `d(w) < max` are left out of `U`.
//! * P4: a subtree is cut when `size + |U| <= max`.
//! * P5: before intersecting with `U`, `N(u)` is filtered to `d(w) >= max`.
//!
//! Candidate sets are sorted vertex arrays, so each intersection is a linear
//! merge against a sorted CSR neighbor slice.

use std::time::Instant;

use crate::bound::{Bound, BoundObserver, LocalBound};
use crate::error::{Error, Result};
use crate::graph::{CsrGraph, Vertex};
use crate::result::{CliqueResult, PruningStats};

/// Exact maximum clique with the default ascending-id order.
///
/// If the clique number exceeds `lb` the result carries it with a witness;
/// otherwise `size == lb` and `found` is false.
pub fn max_clique(g: &CsrGraph, lb: usize) -> CliqueResult {
    ExactSolver::new(g).lower_bound(lb).run()
}

/// Configurable front-end for the exact search.
pub struct ExactSolver<'a> {
    graph: &'a CsrGraph,
    lb: usize,
    order: Option<Vec<Vertex>>,
    observer: Option<&'a dyn BoundObserver>,
}

impl<'a> ExactSolver<'a> {
    pub fn new(graph: &'a CsrGraph) -> Self {
        Self {
            graph,
            lb: 0,
            order: None,
            observer: None,
        }
    }

    pub fn lower_bound(mut self, lb: usize) -> Self {
        self.lb = lb;
        self
    }

    /// Sets the root iteration order. `order` must be a permutation of `0..n`.
    pub fn order(mut self, order: &[Vertex]) -> Result<Self> {
        check_permutation(order, self.graph.vertex_count())?;
        self.order = Some(order.to_vec());
        Ok(self)
    }

    pub fn observer(mut self, observer: &'a dyn BoundObserver) -> Self {
        self.observer = Some(observer);
        self
    }

    pub fn run(self) -> CliqueResult {
        let start = Instant::now();
        let bound = LocalBound::with_observer(self.lb, self.observer);
        let rank = self.order.as_deref().map(ranks);
        let mut search = Search::new(self.graph, &bound, rank.as_deref());
        match &self.order {
            Some(order) => order.iter().for_each(|&v| {
                self.notify_root(v);
                search.root(v);
            }),
            None => self.graph.vertices().for_each(|v| {
                self.notify_root(v);
                search.root(v);
            }),
        }
        let (stats, roots) = (search.stats, search.roots_expanded);
        let (size, members) = bound.into_parts();
        CliqueResult::from_bound(size, members, stats, roots, start.elapsed())
    }

    fn notify_root(&self, v: Vertex) {
        if let Some(observer) = self.observer {
            observer.root_started(v);
        }
    }
}

pub(crate) fn check_permutation(order: &[Vertex], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::InvalidParameter(format!(
            "order has {} entries for {n} vertices",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        match seen.get_mut(v as usize) {
            Some(slot) if !*slot => *slot = true,
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "order is not a permutation (vertex {v})"
                )))
            }
        }
    }
    Ok(())
}

fn ranks(order: &[Vertex]) -> Vec<u32> {
    let mut rank = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        rank[v as usize] = i as u32;
    }
    rank
}

/// Runs the recursive extension step on its own.
///
/// `partial` is the clique built so far (its length is the current `size`),
/// `candidates` the sorted set `U` of vertices adjacent to all of it. Raises
/// `bound` to the size of the best extension that beats it and returns the
/// deepest recursion level reached below this call.
pub fn clique_extend<B: Bound>(
    g: &CsrGraph,
    bound: &B,
    candidates: &[Vertex],
    partial: &mut Vec<Vertex>,
    stats: &mut PruningStats,
) -> usize {
    debug_assert!(candidates.windows(2).all(|w| w[0] < w[1]));
    let mut search = Search::new(g, bound, None);
    search.levels.push(candidates.to_vec());
    std::mem::swap(&mut search.stack, partial);
    search.extend(0);
    std::mem::swap(&mut search.stack, partial);
    *stats += search.stats;
    search.deepest
}

/// Per-worker search state. Candidate buffers are reused across levels.
pub(crate) struct Search<'a, B> {
    graph: &'a CsrGraph,
    bound: &'a B,
    rank: Option<&'a [u32]>,
    levels: Vec<Vec<Vertex>>,
    stack: Vec<Vertex>,
    deepest: usize,
    pub(crate) stats: PruningStats,
    pub(crate) roots_expanded: u64,
}

impl<'a, B: Bound> Search<'a, B> {
    pub(crate) fn new(graph: &'a CsrGraph, bound: &'a B, rank: Option<&'a [u32]>) -> Self {
        Self {
            graph,
            bound,
            rank,
            levels: Vec::new(),
            stack: Vec::new(),
            deepest: 0,
            stats: PruningStats::default(),
            roots_expanded: 0,
        }
    }

    #[inline]
    fn rank(&self, v: Vertex) -> u32 {
        match self.rank {
            Some(rank) => rank[v as usize],
            None => v,
        }
    }

    fn level(&mut self, depth: usize) -> Vec<Vertex> {
        if self.levels.len() <= depth {
            self.levels.resize_with(depth + 1, Vec::new);
        }
        let mut buf = std::mem::take(&mut self.levels[depth]);
        buf.clear();
        buf
    }

    /// Searches all cliques whose earliest vertex (in iteration order) is `v`.
    pub(crate) fn root(&mut self, v: Vertex) {
        let g = self.graph;
        let max = self.bound.current();
        if g.degree(v) < max {
            self.stats.p1 += 1;
            return;
        }
        self.roots_expanded += 1;
        let own_rank = self.rank(v);
        let mut candidates = self.level(0);
        for &w in g.neighbors(v) {
            if self.rank(w) <= own_rank {
                self.stats.p2 += 1;
            } else if g.degree(w) < max {
                self.stats.p3 += 1;
            } else {
                candidates.push(w);
            }
        }
        // Filtering a sorted neighbor slice keeps U sorted by id, whatever the root order.
        self.levels[0] = candidates;
        self.stack.clear();
        self.stack.push(v);
        self.extend(0);
        self.stack.clear();
    }

    /// Extends the clique on `self.stack` by the candidates in `levels[depth]`.
    fn extend(&mut self, depth: usize) {
        self.deepest = self.deepest.max(depth);
        let g = self.graph;
        let candidates = std::mem::take(&mut self.levels[depth]);
        if candidates.is_empty() {
            self.bound.offer(&self.stack);
            self.levels[depth] = candidates;
            return;
        }
        let size = self.stack.len();
        for (i, &u) in candidates.iter().enumerate() {
            let max = self.bound.current();
            if size + (candidates.len() - i) <= max {
                self.stats.p4 += 1;
                break;
            }
            // Remaining U after removing u, intersected with the degree-filtered N(u).
            let rest = &candidates[i + 1..];
            let mut next = self.level(depth + 1);
            let mut j = 0;
            for &w in g.neighbors(u) {
                if g.degree(w) < max {
                    self.stats.p5 += 1;
                    continue;
                }
                while j < rest.len() && rest[j] < w {
                    j += 1;
                }
                if j < rest.len() && rest[j] == w {
                    next.push(w);
                    j += 1;
                }
            }
            self.levels[depth + 1] = next;
            self.stack.push(u);
            self.extend(depth + 1);
            self.stack.pop();
        }
        self.levels[depth] = candidates;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, erdos_renyi, generate_hamming, generate_johnson};
    use crate::oracle::brute_force_max_clique;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Mutex;

    #[test]
    fn triangle() {
        let r = max_clique(&complete(3), 0);
        assert_eq!(r.size, 3);
        assert_eq!(r.members, vec![0, 1, 2]);
        assert!(r.found);
    }

    #[test]
    fn empty_and_edgeless() {
        let r = max_clique(&CsrGraph::empty(0), 0);
        assert_eq!(r.size, 0);
        assert!(!r.found);
        let r = max_clique(&CsrGraph::empty(4), 0);
        assert_eq!(r.size, 1);
        assert_eq!(r.members, vec![0]);
    }

    #[test]
    fn hamming_6_4_counters() {
        let g = generate_hamming(6, 4).unwrap();
        let r = max_clique(&g, 0);
        assert_eq!(r.size, 4);
        assert!(g.is_clique(&r.members));
        assert_eq!((r.stats.p1, r.stats.p2, r.stats.p3, r.stats.p5), (0, 704, 0, 0));
        assert_eq!(r.roots_expanded, 64);
    }

    #[test]
    fn johnson_instances() {
        let r = max_clique(&generate_johnson(8, 4, 4).unwrap(), 0);
        assert_eq!(r.size, 14);
        let r = max_clique(&generate_johnson(8, 2, 4).unwrap(), 0);
        assert_eq!(r.size, 4);
    }

    #[test]
    fn matches_oracle_on_random_graph() {
        let g = erdos_renyi(50, 0.4, 11);
        let r = max_clique(&g, 0);
        assert_eq!(r.size, brute_force_max_clique(&g).unwrap().size);
        assert!(g.is_clique(&r.members));
    }

    #[test]
    fn lower_bound_semantics() {
        let g = erdos_renyi(40, 0.5, 3);
        let omega = brute_force_max_clique(&g).unwrap().size;

        let at = max_clique(&g, omega);
        assert_eq!(at.size, omega);
        assert!(!at.found);
        assert!(at.members.is_empty());

        let below = max_clique(&g, omega - 1);
        assert_eq!(below.size, omega);
        assert!(below.found);
        assert!(g.is_clique(&below.members));

        let above = max_clique(&g, omega + 3);
        assert_eq!(above.size, omega + 3);
        assert!(!above.found);
    }

    #[test]
    fn order_independence() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..5 {
            let g = erdos_renyi(35, 0.4, seed);
            let reference = max_clique(&g, 0);
            let mut order: Vec<Vertex> = g.vertices().collect();
            for _ in 0..20 {
                order.shuffle(&mut rng);
                let r = ExactSolver::new(&g).order(&order).unwrap().run();
                assert_eq!(r.size, reference.size);
                assert!(g.is_clique(&r.members));
                if r.stats.p1 == 0 {
                    assert_eq!(r.stats.p2, g.edge_count() as u64);
                }
            }
        }
    }

    #[test]
    fn rejects_non_permutation() {
        let g = complete(3);
        assert!(ExactSolver::new(&g).order(&[0, 1]).is_err());
        assert!(ExactSolver::new(&g).order(&[0, 1, 1]).is_err());
        assert!(ExactSolver::new(&g).order(&[0, 1, 3]).is_err());
    }

    #[test]
    fn extend_base_case_raises_bound() {
        let g = complete(6);
        let bound = LocalBound::new(3);
        let mut partial = vec![0, 1, 2, 3, 4];
        let mut stats = PruningStats::default();
        clique_extend(&g, &bound, &[], &mut partial, &mut stats);
        assert_eq!(bound.current(), 5);
    }

    #[test]
    fn extend_cardinality_cut() {
        let g = complete(3);
        let bound = LocalBound::new(3);
        let mut partial = vec![0, 1];
        let mut stats = PruningStats::default();
        let depth = clique_extend(&g, &bound, &[2], &mut partial, &mut stats);
        assert_eq!(stats.p4, 1);
        assert_eq!(depth, 0);
        assert_eq!(bound.current(), 3);
    }

    #[test]
    fn extend_k4_hand_trace() {
        // {0} + U={1,2,3}: picks 1 (U'={2,3}), then 2 (U''={3}), then 3 (U'''={}),
        // records 4; back at depths 1 and 0 the next branch is cut by size + |U| <= 4.
        let g = complete(4);
        let bound = LocalBound::new(0);
        let mut partial = vec![0];
        let mut stats = PruningStats::default();
        let depth = clique_extend(&g, &bound, &[1, 2, 3], &mut partial, &mut stats);
        assert_eq!(bound.current(), 4);
        assert_eq!(depth, 3);
        assert_eq!(partial, vec![0]);
        assert_eq!(stats.p4, 2);
    }

    #[test]
    fn cycle_has_clique_number_two() {
        assert_eq!(max_clique(&cycle(5), 0).size, 2);
    }

    struct Monotone(Mutex<Vec<(usize, usize, bool)>>);

    impl BoundObserver for Monotone {
        fn offered(&self, proposed: usize, previous: usize, accepted: bool) {
            self.0.lock().unwrap().push((proposed, previous, accepted));
        }
    }

    #[test]
    fn bound_never_decreases() {
        let g = erdos_renyi(45, 0.5, 9);
        let log = Monotone(Mutex::new(Vec::new()));
        let r = ExactSolver::new(&g).observer(&log).run();
        let events = log.0.into_inner().unwrap();
        let mut current = 0;
        for (proposed, previous, accepted) in events {
            assert_eq!(previous, current);
            assert_eq!(accepted, proposed > previous);
            if accepted {
                current = proposed;
            }
        }
        assert_eq!(current, r.size);
    }
}
