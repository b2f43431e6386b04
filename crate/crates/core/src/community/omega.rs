//! Omega index: chance-corrected agreement between two overlapping covers.
//!
//! For every unordered node pair, each cover assigns the number of its
//! communities containing both nodes. The index compares how often the two
//! covers assign the same count against what independent covers with the same
//! count distributions would give.

use std::collections::{BTreeMap, HashMap};
use std::io::BufRead;

use crate::error::{parse_error, Error, Result};
use crate::graph::Vertex;

/// Node-to-community memberships over nodes `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    n: usize,
    communities: Vec<Vec<Vertex>>,
}

impl Cover {
    /// Builds a cover from communities given as node lists. Duplicate nodes
    /// within a community are ignored.
    pub fn from_communities(n: usize, communities: &[Vec<Vertex>]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(communities.len());
        for community in communities {
            if let Some(&v) = community.iter().find(|&&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange { vertex: v as u64, n });
            }
            let mut c = community.clone();
            c.sort_unstable();
            c.dedup();
            normalized.push(c);
        }
        Ok(Self {
            n,
            communities: normalized,
        })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Community indices of every node.
    pub fn memberships(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for (i, community) in self.communities.iter().enumerate() {
            for &v in community {
                out[v as usize].push(i);
            }
        }
        out
    }

    /// Co-membership count of every pair that shares at least one community.
    fn pair_counts(&self) -> HashMap<(Vertex, Vertex), u32> {
        let mut counts = HashMap::new();
        for community in &self.communities {
            for (i, &u) in community.iter().enumerate() {
                for &v in &community[i + 1..] {
                    *counts.entry((u, v)).or_insert(0) += 1;
                }
            }
        }
        counts
    }
}

/// Histogram of co-membership counts over all pairs; index 0 includes the
/// pairs that share no community.
fn count_histogram(counts: &HashMap<(Vertex, Vertex), u32>, pairs: u64) -> BTreeMap<u32, u64> {
    let mut hist = BTreeMap::new();
    for &t in counts.values() {
        *hist.entry(t).or_insert(0) += 1;
    }
    hist.insert(0, pairs - counts.len() as u64);
    hist
}

/// Omega index of two covers of the same `n >= 2` nodes. Equals 1 for
/// identical pair-count profiles, is around 0 for chance agreement and can be
/// negative.
pub fn omega_index(a: &Cover, b: &Cover) -> Result<f64> {
    if a.n != b.n {
        return Err(Error::UniverseMismatch(a.n, b.n));
    }
    if a.n < 2 {
        return Err(Error::InvalidParameter(format!(
            "omega index needs at least 2 nodes, got {}",
            a.n
        )));
    }
    let pairs = (a.n as u64) * (a.n as u64 - 1) / 2;
    let (ca, cb) = (a.pair_counts(), b.pair_counts());

    // Pairs absent from both maps agree on 0.
    let mut agree = pairs - ca.keys().chain(cb.keys().filter(|p| !ca.contains_key(p))).count() as u64;
    agree += ca
        .iter()
        .filter(|(pair, &t)| cb.get(pair) == Some(&t))
        .count() as u64;

    let (ha, hb) = (count_histogram(&ca, pairs), count_histogram(&cb, pairs));
    let total = pairs as f64;
    let observed = agree as f64 / total;
    let expected: f64 = ha
        .iter()
        .filter_map(|(t, &na)| hb.get(t).map(|&nb| na as f64 * nb as f64))
        .sum::<f64>()
        / (total * total);

    if expected == 1.0 {
        // Both covers put every pair at the same count, so they agree everywhere.
        return Ok(1.0);
    }
    Ok((observed - expected) / (1.0 - expected))
}

/// Reads one community per line, members as whitespace-separated node ids.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_communities<R: BufRead>(reader: R) -> Result<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let members = trimmed
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| parse_error(idx + 1, format!("invalid node id {t:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        out.push(members);
    }
    Ok(out)
}

/// Reads `node community [community ...]` lines (the LFR ground-truth layout)
/// and returns the communities ordered by community id.
pub fn parse_memberships<R: BufRead>(reader: R) -> Result<Vec<Vec<u64>>> {
    let mut by_id: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut ids = trimmed.split_whitespace().map(|t| {
            t.parse::<u64>()
                .map_err(|_| parse_error(idx + 1, format!("invalid id {t:?}")))
        });
        let node = ids.next().expect("non-empty line has a token")?;
        for community in ids {
            by_id.entry(community?).or_default().push(node);
        }
    }
    Ok(by_id.into_values().collect())
}

/// Maps node labels from two labeled covers onto a shared universe of `n`
/// nodes. Labels are numbered in first-seen order; nodes that appear in
/// neither cover are simply in no community.
pub fn covers_from_labeled(n: usize, a: &[Vec<u64>], b: &[Vec<u64>]) -> Result<(Cover, Cover)> {
    let mut index: HashMap<u64, Vertex> = HashMap::new();
    let mut map = |side: &[Vec<u64>]| -> Result<Vec<Vec<Vertex>>> {
        side.iter()
            .map(|community| {
                community
                    .iter()
                    .map(|&label| {
                        let next = index.len();
                        let id = *index.entry(label).or_insert(next as Vertex);
                        if id as usize >= n {
                            return Err(Error::InvalidParameter(format!(
                                "covers mention more than {n} distinct nodes"
                            )));
                        }
                        Ok(id)
                    })
                    .collect()
            })
            .collect()
    };
    let (ma, mb) = (map(a)?, map(b)?);
    Ok((Cover::from_communities(n, &ma)?, Cover::from_communities(n, &mb)?))
}
