use std::ops::AddAssign;
use std::time::Duration;

use crate::graph::Vertex;

/// Event counters for the five pruning rules of the exact search.
///
/// `p1`, `p2`, `p3` and `p5` count vertex occurrences that were discarded;
/// `p4` counts subtrees cut by the cardinality bound.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PruningStats {
    /// Root vertices skipped because `d(v) < max`.
    pub p1: u64,
    /// Neighbors of a root that precede it in the iteration order.
    pub p2: u64,
    /// Neighbors of a root with `d(w) < max`.
    pub p3: u64,
    /// Search nodes cut because `size + |U| <= max`.
    pub p4: u64,
    /// Neighbors dropped from `N'(u)` because `d(w) < max`.
    pub p5: u64,
}

impl AddAssign for PruningStats {
    fn add_assign(&mut self, rhs: Self) {
        self.p1 += rhs.p1;
        self.p2 += rhs.p2;
        self.p3 += rhs.p3;
        self.p4 += rhs.p4;
        self.p5 += rhs.p5;
    }
}

/// Outcome of a maximum clique search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    /// Largest clique size found, or the lower bound when nothing beat it.
    pub size: usize,
    /// Sorted witness clique; empty when `found` is false.
    pub members: Vec<Vertex>,
    /// False when no clique larger than the initial lower bound was found.
    pub found: bool,
    pub stats: PruningStats,
    /// Root vertices that passed the degree test and were searched.
    pub roots_expanded: u64,
    pub elapsed: Duration,
}

impl CliqueResult {
    pub(crate) fn from_bound(
        size: usize,
        mut members: Vec<Vertex>,
        stats: PruningStats,
        roots_expanded: u64,
        elapsed: Duration,
    ) -> Self {
        members.sort_unstable();
        let found = !members.is_empty();
        debug_assert!(!found || members.len() == size);
        Self {
            size,
            members,
            found,
            stats,
            roots_expanded,
            elapsed,
        }
    }
}
