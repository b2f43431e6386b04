//! Shared-memory parallel root loop.
//!
//! Root vertices are handed out in `chunk`-sized blocks from a shared atomic
//! cursor. All workers prune against one incumbent: reads are lock-free atomic
//! loads, and an improvement is published under a mutex that re-checks the
//! value, so concurrent proposals can never lower the bound or lose the
//! larger of two updates.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::bound::{Bound, BoundObserver};
use crate::error::{Error, Result};
use crate::exact::Search;
use crate::graph::{CsrGraph, Vertex};
use crate::heuristic::{HeuristicSearch, SelectionPolicy};
use crate::result::{CliqueResult, PruningStats};

pub const DEFAULT_CHUNK: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParallelConfig {
    pub workers: usize,
    /// Root vertices claimed per cursor fetch.
    pub chunk: usize,
    /// Initial incumbent.
    pub lb: usize,
}

impl Default for ParallelConfig {
    fn default() -> Self {
        Self {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            chunk: DEFAULT_CHUNK,
            lb: 0,
        }
    }
}

impl ParallelConfig {
    pub fn new(workers: usize) -> Self {
        Self {
            workers,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::InvalidParameter("workers must be at least 1".into()));
        }
        if self.chunk == 0 {
            return Err(Error::InvalidParameter("chunk must be at least 1".into()));
        }
        Ok(())
    }
}

/// Which per-root search the workers run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Exact,
    Heuristic(SelectionPolicy),
}

/// Incumbent shared by all workers.
pub struct SharedBound<'o> {
    max: AtomicUsize,
    witness: Mutex<Vec<Vertex>>,
    observer: Option<&'o dyn BoundObserver>,
}

impl<'o> SharedBound<'o> {
    pub fn new(initial: usize, observer: Option<&'o dyn BoundObserver>) -> Self {
        Self {
            max: AtomicUsize::new(initial),
            witness: Mutex::new(Vec::new()),
            observer,
        }
    }

    pub fn into_parts(self) -> (usize, Vec<Vertex>) {
        let witness = self.witness.into_inner().unwrap_or_else(|e| e.into_inner());
        (self.max.into_inner(), witness)
    }
}

impl Bound for SharedBound<'_> {
    #[inline]
    fn current(&self) -> usize {
        self.max.load(Ordering::Acquire)
    }

    fn offer(&self, members: &[Vertex]) -> bool {
        let size = members.len();
        let seen = self.max.load(Ordering::Acquire);
        if size <= seen {
            if let Some(observer) = self.observer {
                observer.offered(size, seen, false);
            }
            return false;
        }
        let mut witness = self.witness.lock().unwrap_or_else(|e| e.into_inner());
        // Only writers hold the lock, so this read is the linearization point.
        let previous = self.max.load(Ordering::Acquire);
        let accepted = size > previous;
        if accepted {
            witness.clear();
            witness.extend_from_slice(members);
            self.max.store(size, Ordering::Release);
        }
        if let Some(observer) = self.observer {
            observer.offered(size, previous, accepted);
        }
        accepted
    }
}

/// Exact maximum clique with `cfg.workers` threads.
pub fn max_clique_parallel(g: &CsrGraph, cfg: &ParallelConfig) -> Result<CliqueResult> {
    run_parallel(g, cfg, Algorithm::Exact, None)
}

/// Parallel driver for either algorithm, with an optional observer that sees
/// every bound proposal and every root handed to a worker.
pub fn run_parallel(
    g: &CsrGraph,
    cfg: &ParallelConfig,
    algorithm: Algorithm,
    observer: Option<&dyn BoundObserver>,
) -> Result<CliqueResult> {
    cfg.validate()?;
    let start = Instant::now();
    let n = g.vertex_count();
    let bound = SharedBound::new(cfg.lb, observer);
    let cursor = AtomicUsize::new(0);

    let claim = || {
        let begin = cursor.fetch_add(cfg.chunk, Ordering::Relaxed);
        (begin < n).then(|| begin..(begin + cfg.chunk).min(n))
    };
    let notify = |v: Vertex| {
        if let Some(observer) = observer {
            observer.root_started(v);
        }
    };

    let worker = || -> (PruningStats, u64) {
        match algorithm {
            Algorithm::Exact => {
                let mut search = Search::new(g, &bound, None);
                while let Some(block) = claim() {
                    for v in block {
                        notify(v as Vertex);
                        search.root(v as Vertex);
                    }
                }
                (search.stats, search.roots_expanded)
            }
            Algorithm::Heuristic(policy) => {
                let mut search = HeuristicSearch::new(g, &bound, policy);
                while let Some(block) = claim() {
                    for v in block {
                        notify(v as Vertex);
                        search.root(v as Vertex);
                    }
                }
                (search.stats, search.roots_expanded)
            }
        }
    };

    let mut stats = PruningStats::default();
    let mut roots = 0;
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..cfg.workers).map(|_| scope.spawn(worker)).collect();
        for handle in handles {
            let (s, r) = handle.join().expect("clique worker panicked");
            stats += s;
            roots += r;
        }
    });

    let (size, members) = bound.into_parts();
    Ok(CliqueResult::from_bound(size, members, stats, roots, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::max_clique;
    use crate::generators::{erdos_renyi, generate_hamming, generate_johnson};
    use crate::heuristic::max_clique_heuristic;

    #[test]
    fn zero_workers_rejected() {
        let g = CsrGraph::empty(3);
        let cfg = ParallelConfig { workers: 0, chunk: 4, lb: 0 };
        assert!(matches!(max_clique_parallel(&g, &cfg), Err(Error::InvalidParameter(_))));
        let cfg = ParallelConfig { workers: 2, chunk: 0, lb: 0 };
        assert!(max_clique_parallel(&g, &cfg).is_err());
    }

    #[test]
    fn structured_instances() {
        let hamming = generate_hamming(6, 4).unwrap();
        let johnson = generate_johnson(8, 4, 4).unwrap();
        for workers in [1, 2, 4, 8] {
            let cfg = ParallelConfig::new(workers);
            let r = max_clique_parallel(&hamming, &cfg).unwrap();
            assert_eq!(r.size, 4);
            assert_eq!(r.stats.p2, 704);
            assert!(hamming.is_clique(&r.members));
            assert_eq!(max_clique_parallel(&johnson, &cfg).unwrap().size, 14);
        }
    }

    #[test]
    fn matches_sequential_on_random_graph() {
        let g = erdos_renyi(60, 0.3, 17);
        let expected = max_clique(&g, 0).size;
        for _ in 0..20 {
            let r = max_clique_parallel(&g, &ParallelConfig { workers: 4, chunk: 3, lb: 0 }).unwrap();
            assert_eq!(r.size, expected);
            assert!(g.is_clique(&r.members));
            assert_eq!(r.stats.p1 + r.roots_expanded, 60);
        }
    }

    #[test]
    fn lower_bound_carried() {
        let g = generate_hamming(6, 4).unwrap();
        let r = max_clique_parallel(&g, &ParallelConfig { workers: 3, chunk: 5, lb: 4 }).unwrap();
        assert_eq!(r.size, 4);
        assert!(!r.found);
    }

    #[test]
    fn heuristic_in_parallel() {
        let g = generate_johnson(8, 4, 4).unwrap();
        let sequential = max_clique_heuristic(&g, SelectionPolicy::MaxDegree);
        let r = run_parallel(
            &g,
            &ParallelConfig::new(4),
            Algorithm::Heuristic(SelectionPolicy::MaxDegree),
            None,
        )
        .unwrap();
        assert_eq!(r.size, sequential.size);
        assert_eq!(r.stats.p2, 0);
        assert!(g.is_clique(&r.members));
    }
}
