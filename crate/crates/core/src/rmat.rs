//! Seeded R-MAT generator.
//!
//! Each directed sample descends `scale` levels of the adjacency matrix,
//! picking quadrant a (top-left), b (top-right), c (bottom-left) or d
//! (bottom-right) at every level. Self-loops are dropped and duplicates
//! collapsed rather than resampled, so the realized undirected edge count is
//! at most `target_edges`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{build_csr, CsrGraph, EdgeList, Vertex};
use crate::seed::derived_rng;

pub const MAX_SCALE: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RmatParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    /// `log2` of the vertex count.
    pub scale: u32,
    /// Number of directed samples drawn.
    pub target_edges: usize,
    pub seed: u64,
}

/// The three parameter sets used for the synthetic test families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RmatFamily {
    /// (0.25, 0.25, 0.25, 0.25): Erdős–Rényi-like degrees.
    Er,
    /// (0.45, 0.15, 0.15, 0.25): skewed degrees.
    Sd1,
    /// (0.55, 0.15, 0.15, 0.15): strongly skewed degrees.
    Sd2,
}

impl RmatFamily {
    pub fn probabilities(self) -> [f64; 4] {
        match self {
            RmatFamily::Er => [0.25, 0.25, 0.25, 0.25],
            RmatFamily::Sd1 => [0.45, 0.15, 0.15, 0.25],
            RmatFamily::Sd2 => [0.55, 0.15, 0.15, 0.15],
        }
    }

    pub fn params(self, scale: u32, target_edges: usize, seed: u64) -> RmatParams {
        let [a, b, c, d] = self.probabilities();
        RmatParams {
            a,
            b,
            c,
            d,
            scale,
            target_edges,
            seed,
        }
    }
}

impl RmatParams {
    pub fn validate(&self) -> Result<()> {
        let probs = [self.a, self.b, self.c, self.d];
        if probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidParameter(format!(
                "R-MAT probabilities must lie in [0, 1], got {probs:?}"
            )));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "R-MAT probabilities must sum to 1, got {sum}"
            )));
        }
        if self.scale > MAX_SCALE {
            return Err(Error::InvalidParameter(format!(
                "R-MAT scale {} exceeds {MAX_SCALE}",
                self.scale
            )));
        }
        Ok(())
    }
}

/// Generates an R-MAT graph on `2^scale` vertices. A pure function of `p`.
pub fn rmat_generate(p: &RmatParams) -> Result<CsrGraph> {
    p.validate()?;
    let n = 1usize << p.scale;
    let mut rng = derived_rng(p.seed, 0, 0);
    let (ab, abc) = (p.a + p.b, p.a + p.b + p.c);
    let mut list = EdgeList::new(n);
    list.edges.reserve(p.target_edges);
    for _ in 0..p.target_edges {
        let (mut u, mut v) = (0 as Vertex, 0 as Vertex);
        for _ in 0..p.scale {
            let r: f64 = rng.gen();
            let (row, col) = if r < p.a {
                (0, 0)
            } else if r < ab {
                (0, 1)
            } else if r < abc {
                (1, 0)
            } else {
                (1, 1)
            };
            u = u << 1 | row;
            v = v << 1 | col;
        }
        list.push(u, v);
    }
    build_csr(&list)
}
