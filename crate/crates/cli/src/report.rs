use std::fmt::Write as _;

use maxclique::io::LoadedGraph;
use maxclique::CliqueResult;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
}

impl GraphStats {
    pub fn of(g: &maxclique::CsrGraph) -> Self {
        Self {
            n: g.vertex_count(),
            m: g.edge_count(),
            max_degree: g.max_degree(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CliqueSummary {
    pub size: usize,
    /// Original vertex labels from the input file.
    pub members: Vec<u64>,
    pub found: bool,
}

#[derive(Debug, Serialize)]
pub struct Counters {
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub p4: u64,
    pub p5: u64,
}

/// Report of a solver run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub graph: GraphStats,
    pub result: CliqueSummary,
    pub counters: Counters,
    pub elapsed_seconds: f64,
    pub seeds: Vec<u64>,
    pub workers: usize,
}

impl RunReport {
    pub fn new(
        command: String,
        loaded: &LoadedGraph,
        result: &CliqueResult,
        seeds: Vec<u64>,
        workers: usize,
    ) -> Self {
        let s = result.stats;
        Self {
            command,
            graph: GraphStats::of(&loaded.graph),
            result: CliqueSummary {
                size: result.size,
                members: loaded.labels_of(&result.members),
                found: result.found,
            },
            counters: Counters {
                p1: s.p1,
                p2: s.p2,
                p3: s.p3,
                p4: s.p4,
                p5: s.p5,
            },
            elapsed_seconds: result.elapsed.as_secs_f64(),
            seeds,
            workers,
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let members: Vec<String> = self.result.members.iter().map(u64::to_string).collect();
        let seeds: Vec<String> = self.seeds.iter().map(u64::to_string).collect();
        let c = &self.counters;
        let rows = [
            ("command", self.command.clone()),
            ("vertices", self.graph.n.to_string()),
            ("edges", self.graph.m.to_string()),
            ("max degree", self.graph.max_degree.to_string()),
            ("clique size", self.result.size.to_string()),
            (
                "members",
                if self.result.found {
                    members.join(" ")
                } else {
                    "(no clique above the lower bound)".into()
                },
            ),
            ("P1 P2 P3 P4 P5", format!("{} {} {} {} {}", c.p1, c.p2, c.p3, c.p4, c.p5)),
            ("elapsed (s)", format!("{:.6}", self.elapsed_seconds)),
            ("seeds", if seeds.is_empty() { "-".into() } else { seeds.join(" ") }),
            ("workers", self.workers.to_string()),
        ];
        for (key, value) in rows {
            let _ = writeln!(out, "{key:<15} {value}");
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct CommunityReport {
    pub command: String,
    pub graph: GraphStats,
    pub k: usize,
    pub c: usize,
    pub seed: u64,
    pub communities: usize,
    pub shared_nodes: usize,
    pub output: String,
    pub elapsed_seconds: f64,
}

#[derive(Debug, Serialize)]
pub struct OmegaReport {
    pub command: String,
    pub n: usize,
    pub omega: f64,
}

#[derive(Debug, Serialize)]
pub struct GenerateReport {
    pub command: String,
    pub graph: GraphStats,
    pub seed: Option<u64>,
    pub output: String,
}

#[derive(Debug, Serialize)]
pub struct EnumerationReport {
    pub command: String,
    pub graph: GraphStats,
    pub maximal_cliques: Vec<Vec<u64>>,
}

/// Simple `key value` table for flat reports.
pub fn table(rows: &[(&str, String)]) -> String {
    rows.iter().map(|(k, v)| format!("{k:<15} {v}\n")).collect()
}
