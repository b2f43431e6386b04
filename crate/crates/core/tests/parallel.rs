use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Mutex;

use maxclique::generators::{erdos_renyi, generate_hamming};
use maxclique::oracle::brute_force_max_clique;
use maxclique::{
    max_clique, max_clique_parallel, run_parallel, Algorithm, BoundObserver, ParallelConfig,
    SelectionPolicy, Vertex,
};

/// Logs every proposal and counts how often each root is processed.
struct Recorder {
    proposals: Mutex<Vec<(usize, usize, bool)>>,
    visits: Vec<AtomicU32>,
}

impl Recorder {
    fn new(n: usize) -> Self {
        Self {
            proposals: Mutex::new(Vec::new()),
            visits: (0..n).map(|_| AtomicU32::new(0)).collect(),
        }
    }
}

impl BoundObserver for Recorder {
    fn offered(&self, proposed: usize, previous: usize, accepted: bool) {
        self.proposals.lock().unwrap().push((proposed, previous, accepted));
    }

    fn root_started(&self, v: Vertex) {
        self.visits[v as usize].fetch_add(1, Ordering::Relaxed);
    }
}

#[test]
fn bound_monotone_no_lost_update_and_every_root_once() {
    for seed in 0..10 {
        let g = erdos_renyi(60, 0.4, seed);
        let recorder = Recorder::new(60);
        let cfg = ParallelConfig { workers: 8, chunk: 2, lb: 0 };
        let r = run_parallel(&g, &cfg, Algorithm::Exact, Some(&recorder)).unwrap();

        let proposals = recorder.proposals.into_inner().unwrap();
        // Accepted updates are serialized, so in log order they strictly increase.
        let accepted: Vec<usize> = proposals.iter().filter(|p| p.2).map(|p| p.0).collect();
        assert!(accepted.windows(2).all(|w| w[0] < w[1]), "{accepted:?}");
        for &(proposed, previous, ok) in &proposals {
            assert_eq!(ok, proposed > previous);
        }
        let best_proposed = proposals.iter().map(|p| p.0).max().unwrap();
        assert_eq!(r.size, best_proposed);
        assert_eq!(r.size, brute_force_max_clique(&g).unwrap().size);

        assert!(recorder.visits.iter().all(|c| c.load(Ordering::Relaxed) == 1));
    }
}

#[test]
fn repeated_runs_at_eight_workers() {
    let g = erdos_renyi(60, 0.5, 77);
    let expected = brute_force_max_clique(&g).unwrap().size;
    for _ in 0..50 {
        let r = max_clique_parallel(&g, &ParallelConfig { workers: 4, chunk: 16, lb: 0 }).unwrap();
        assert_eq!(r.size, expected);
    }
    for _ in 0..20 {
        let r = max_clique_parallel(&g, &ParallelConfig { workers: 8, chunk: 1, lb: 0 }).unwrap();
        assert_eq!(r.size, expected);
        assert!(g.is_clique(&r.members));
    }
}

#[test]
fn more_workers_than_roots() {
    let g = erdos_renyi(5, 0.6, 1);
    let r = max_clique_parallel(&g, &ParallelConfig { workers: 16, chunk: 16, lb: 0 }).unwrap();
    assert_eq!(r.size, max_clique(&g, 0).size);
}

#[test]
fn p2_equals_m_when_nothing_skipped() {
    let g = generate_hamming(6, 4).unwrap();
    for workers in [1, 3, 8] {
        let r = max_clique_parallel(&g, &ParallelConfig { workers, chunk: 5, lb: 0 }).unwrap();
        assert_eq!(r.stats.p1, 0);
        assert_eq!(r.stats.p2, 704);
    }
}

#[test]
fn parallel_heuristic_shares_bound() {
    let g = erdos_renyi(60, 0.3, 5);
    let omega = max_clique(&g, 0).size;
    let recorder = Recorder::new(60);
    let policy = SelectionPolicy::RandomNeighbor { seed: 3 };
    let r = run_parallel(&g, &ParallelConfig::new(4), Algorithm::Heuristic(policy), Some(&recorder)).unwrap();
    assert!(r.size <= omega);
    assert!(g.is_clique(&r.members));
    assert!(recorder.visits.iter().all(|c| c.load(Ordering::Relaxed) == 1));
}
