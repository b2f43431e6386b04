//! Compressed adjacency storage for undirected simple graphs.
//!
//! A [`CsrGraph`] keeps two arrays: `offsets` (one entry per vertex plus a
//! sentinel) and `neighbors` (the concatenated, ascending neighbor lists).
//! Vertex `v`'s neighbors live in `neighbors[offsets[v]..offsets[v + 1]]`.

use crate::error::{Error, Result};

/// Vertex identifier. Vertices of a graph with `n` vertices are `0..n`.
pub type Vertex = u32;

/// Unnormalized list of undirected edges, possibly with duplicates and self-loops.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl EdgeList {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
        }
    }

    pub fn with_edges(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        Self { n, edges }
    }

    pub fn push(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }
}

/// Immutable undirected simple graph in compressed sparse row layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsrGraph {
    offsets: Vec<usize>,
    neighbors: Vec<Vertex>,
}

/// Normalizes an edge list into a [`CsrGraph`]: self-loops are dropped,
/// duplicates collapsed and every pair is stored in both directions.
pub fn build_csr(list: &EdgeList) -> Result<CsrGraph> {
    let n = list.n;
    if n > Vertex::MAX as usize {
        return Err(Error::InvalidParameter(format!(
            "vertex count {n} exceeds the supported maximum {}",
            Vertex::MAX
        )));
    }
    let mut degree = vec![0usize; n];
    for &(u, v) in &list.edges {
        for x in [u, v] {
            if x as usize >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: x as u64,
                    n,
                });
            }
        }
        if u != v {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
    }

    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for d in &degree {
        offsets.push(offsets.last().unwrap() + d);
    }
    let mut cursor = offsets[..n].to_vec();
    let mut raw = vec![0 as Vertex; offsets[n]];
    for &(u, v) in &list.edges {
        if u == v {
            continue;
        }
        raw[cursor[u as usize]] = v;
        cursor[u as usize] += 1;
        raw[cursor[v as usize]] = u;
        cursor[v as usize] += 1;
    }

    // Sort and dedup each slice, compacting in place.
    let mut write = 0;
    let mut compact_offsets = Vec::with_capacity(n + 1);
    compact_offsets.push(0);
    for v in 0..n {
        let slice = &mut raw[offsets[v]..offsets[v + 1]];
        slice.sort_unstable();
        let mut last = None;
        for i in offsets[v]..offsets[v + 1] {
            let w = raw[i];
            if last != Some(w) {
                raw[write] = w;
                write += 1;
                last = Some(w);
            }
        }
        compact_offsets.push(write);
    }
    raw.truncate(write);
    raw.shrink_to_fit();

    Ok(CsrGraph {
        offsets: compact_offsets,
        neighbors: raw,
    })
}

impl CsrGraph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            neighbors: Vec::new(),
        }
    }

    /// Convenience wrapper around [`build_csr`].
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        build_csr(&EdgeList::with_edges(n, edges.to_vec()))
    }

    /// Builds a graph from per-vertex neighbor lists that are already sorted,
    /// duplicate-free, loop-free and symmetric. Used by the generators, which
    /// produce adjacency in that form directly.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<Vertex>>) -> Self {
        let mut offsets = Vec::with_capacity(adjacency.len() + 1);
        offsets.push(0);
        let total = adjacency.iter().map(Vec::len).sum();
        let mut neighbors = Vec::with_capacity(total);
        for list in adjacency {
            neighbors.extend_from_slice(&list);
            offsets.push(neighbors.len());
        }
        let g = Self { offsets, neighbors };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// The concatenated neighbor array (length `2m`).
    pub fn adjacency(&self) -> &[Vertex] {
        &self.neighbors
    }

    pub fn max_degree(&self) -> usize {
        self.offsets
            .windows(2)
            .map(|w| w[1] - w[0])
            .max()
            .unwrap_or(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..self.vertex_count() as Vertex
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            let ns = self.neighbors(u);
            let start = ns.partition_point(|&w| w <= u);
            ns[start..].iter().map(move |&w| (u, w))
        })
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// True when `members` are distinct, in range and pairwise adjacent.
    pub fn is_clique(&self, members: &[Vertex]) -> bool {
        let n = self.vertex_count();
        if members.iter().any(|&v| v as usize >= n) {
            return false;
        }
        members.iter().enumerate().all(|(i, &u)| {
            members[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// True when `members` is a clique that no further vertex extends.
    pub fn is_maximal_clique(&self, members: &[Vertex]) -> bool {
        if !self.is_clique(members) {
            return false;
        }
        match members.first() {
            None => self.vertex_count() == 0,
            // Any extension must be a neighbor of the first member.
            Some(&first) => !self.neighbors(first).iter().any(|&w| {
                !members.contains(&w) && members[1..].iter().all(|&m| self.has_edge(m, w))
            }),
        }
    }

    /// Checks the structural invariants, returning a description of the first violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.vertex_count();
        if self.offsets[0] != 0 {
            return Err("offsets[0] != 0".into());
        }
        if self.offsets[n] != self.neighbors.len() {
            return Err("offsets[n] != neighbor array length".into());
        }
        if !self.neighbors.len().is_multiple_of(2) {
            return Err("neighbor array has odd length".into());
        }
        for v in 0..n {
            if self.offsets[v] > self.offsets[v + 1] {
                return Err(format!("offsets decrease at vertex {v}"));
            }
            let ns = self.neighbors(v as Vertex);
            if ns.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("neighbors of {v} not strictly ascending"));
            }
            for &w in ns {
                if w as usize >= n {
                    return Err(format!("neighbor {w} of {v} out of range"));
                }
                if w as usize == v {
                    return Err(format!("self-loop at {v}"));
                }
                if !self.has_edge(w, v as Vertex) {
                    return Err(format!("edge {v}->{w} has no reverse"));
                }
            }
        }
        Ok(())
    }
}

/// Merges two ascending slices into their intersection.
pub(crate) fn intersect_sorted(a: &[Vertex], b: &[Vertex], out: &mut Vec<Vertex>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle() {
        let g = CsrGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert!(g.is_clique(&[0, 1, 2]));
    }

    #[test]
    fn duplicates_and_self_loops_normalized() {
        let g = CsrGraph::from_edges(2, &[(0, 1), (1, 0), (0, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn endpoint_out_of_range() {
        let err = CsrGraph::from_edges(3, &[(0, 3)]).unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn four_vertex_sample_matches_matrix_build() {
        // 0-1, 0-2, 1-2, 2-3: a triangle with a pendant vertex.
        let edges = [(2, 3), (1, 0), (0, 2), (2, 1)];
        let g = CsrGraph::from_edges(4, &edges).unwrap();
        assert_eq!(g.offsets(), &[0, 2, 4, 7, 8]);
        assert_eq!(g.adjacency(), &[1, 2, 0, 2, 0, 1, 3, 2]);

        let mut matrix = [[false; 4]; 4];
        for &(u, v) in &edges {
            matrix[u as usize][v as usize] = true;
            matrix[v as usize][u as usize] = true;
        }
        for u in 0..4 {
            let from_matrix: Vec<Vertex> = (0..4).filter(|&v| matrix[u][v as usize]).collect();
            assert_eq!(g.neighbors(u as Vertex), from_matrix.as_slice());
        }
    }

    #[test]
    fn edges_iterates_each_pair_once() {
        let g = CsrGraph::from_edges(4, &[(3, 0), (1, 2), (0, 1)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn maximality() {
        let g = CsrGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(g.is_maximal_clique(&[0, 1, 2]));
        assert!(!g.is_maximal_clique(&[0, 1]));
        assert!(g.is_maximal_clique(&[2, 3]));
        assert!(!g.is_maximal_clique(&[0, 3]));
    }

    #[test]
    fn empty_graph() {
        let g = CsrGraph::empty(5);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.max_degree(), 0);
        assert!(g.check_invariants().is_ok());
    }

    proptest! {
        #[test]
        fn build_csr_satisfies_invariants(
            n in 1usize..40,
            raw in proptest::collection::vec((0u32..40, 0u32..40), 0..200),
        ) {
            let edges: Vec<_> = raw.into_iter().map(|(u, v)| (u % n as u32, v % n as u32)).collect();
            let g = CsrGraph::from_edges(n, &edges).unwrap();
            prop_assert!(g.check_invariants().is_ok());
            let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
            prop_assert_eq!(degree_sum, 2 * g.edge_count());
            for &(u, v) in &edges {
                prop_assert_eq!(g.has_edge(u, v), u != v);
            }
        }
    }
}
