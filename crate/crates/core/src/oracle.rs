//! Slow reference implementations used to cross-check the solvers.
//!
//! Both routines work on bitset adjacency rather than the CSR arrays, so they
//! share no search code with the solvers they check.

use crate::community::CliqueSet;
use crate::error::{Error, Result};
use crate::graph::{CsrGraph, Vertex};
use crate::result::{CliqueResult, PruningStats};

pub const MAX_BRUTE_FORCE_VERTICES: usize = 64;
pub const MAX_ENUMERATION_VERTICES: usize = 200;
pub const MAX_ENUMERATED_CLIQUES: usize = 1_000_000;

/// Maximum clique by plain candidate-set recursion over 64-bit masks.
///
/// The only cut is the cardinality test `|R| + |P| <= best`; none of the
/// degree-based rules are used.
pub fn brute_force_max_clique(g: &CsrGraph) -> Result<CliqueResult> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::OracleGuard(format!(
            "{n} vertices, brute force supports at most {MAX_BRUTE_FORCE_VERTICES}"
        )));
    }
    let start = std::time::Instant::now();
    let adj: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    fn expand(adj: &[u64], clique: u64, mut candidates: u64, best: &mut u64) {
        if candidates == 0 {
            if clique.count_ones() > best.count_ones() {
                *best = clique;
            }
            return;
        }
        while candidates != 0 {
            if clique.count_ones() + candidates.count_ones() <= best.count_ones() {
                return;
            }
            let v = candidates.trailing_zeros();
            candidates &= !(1 << v);
            expand(adj, clique | 1 << v, candidates & adj[v as usize], best);
        }
    }

    let mut best = 0u64;
    expand(&adj, 0, all, &mut best);
    let members: Vec<Vertex> = (0..n as Vertex).filter(|&v| best >> v & 1 == 1).collect();
    Ok(CliqueResult {
        size: members.len(),
        found: !members.is_empty(),
        members,
        stats: PruningStats::default(),
        roots_expanded: 0,
        elapsed: start.elapsed(),
    })
}

/// Fixed-width bitset sized for [`MAX_ENUMERATION_VERTICES`].
#[derive(Clone, Copy, PartialEq, Eq)]
struct Bits([u64; 4]);

impl Bits {
    const EMPTY: Bits = Bits([0; 4]);

    fn set(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn clear(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn and(self, o: Bits) -> Bits {
        Bits(std::array::from_fn(|i| self.0[i] & o.0[i]))
    }

    fn is_empty(self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// All maximal cliques, each exactly once, by Bron–Kerbosch without pivoting.
/// Cliques are sorted internally and emitted in lexicographic order.
pub fn enumerate_maximal_cliques(g: &CsrGraph) -> Result<CliqueSet> {
    let n = g.vertex_count();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::OracleGuard(format!(
            "{n} vertices, enumeration supports at most {MAX_ENUMERATION_VERTICES}"
        )));
    }
    let adj: Vec<Bits> = g
        .vertices()
        .map(|v| {
            let mut b = Bits::EMPTY;
            g.neighbors(v).iter().for_each(|&w| b.set(w as usize));
            b
        })
        .collect();

    fn recurse(
        adj: &[Bits],
        clique: &mut Vec<Vertex>,
        mut candidates: Bits,
        mut excluded: Bits,
        out: &mut Vec<Vec<Vertex>>,
    ) -> Result<()> {
        if candidates.is_empty() {
            if excluded.is_empty() && !clique.is_empty() {
                if out.len() >= MAX_ENUMERATED_CLIQUES {
                    return Err(Error::OracleGuard(format!(
                        "more than {MAX_ENUMERATED_CLIQUES} maximal cliques"
                    )));
                }
                out.push(clique.clone());
            }
            return Ok(());
        }
        while let Some(v) = candidates.first() {
            clique.push(v as Vertex);
            recurse(adj, clique, candidates.and(adj[v]), excluded.and(adj[v]), out)?;
            clique.pop();
            candidates.clear(v);
            excluded.set(v);
        }
        Ok(())
    }

    let mut all = Bits::EMPTY;
    (0..n).for_each(|v| all.set(v));
    let mut out = Vec::new();
    recurse(&adj, &mut Vec::new(), all, Bits::EMPTY, &mut out)?;
    Ok(CliqueSet::new(out))
}
