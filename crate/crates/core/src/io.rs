//! Graph file formats: DIMACS ASCII `clq` and plain whitespace edge lists.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{parse_error, Error, Result};
use crate::graph::{build_csr, CsrGraph, EdgeList, Vertex};

/// A graph together with the external id of each internal vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedGraph {
    pub graph: CsrGraph,
    /// `labels[v]` is the id vertex `v` carried in the input file.
    pub labels: Vec<u64>,
}

impl LoadedGraph {
    pub fn label(&self, v: Vertex) -> u64 {
        self.labels[v as usize]
    }

    pub fn labels_of(&self, vertices: &[Vertex]) -> Vec<u64> {
        vertices.iter().map(|&v| self.label(v)).collect()
    }

    /// Wraps a generated graph so that labels equal internal ids.
    pub fn unlabeled(graph: CsrGraph) -> Self {
        let labels = (0..graph.vertex_count() as u64).collect();
        Self { graph, labels }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

impl GraphFormat {
    /// `.clq` files are DIMACS, everything else is an edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("clq") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

pub fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<LoadedGraph> {
    let reader = BufReader::new(File::open(path)?);
    match format.unwrap_or_else(|| GraphFormat::from_path(path)) {
        GraphFormat::Dimacs => parse_dimacs(reader),
        GraphFormat::EdgeList => parse_edge_list(reader),
    }
}

fn parse_int(token: Option<&str>, line: usize, what: &str) -> Result<u64> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_error(line, format!("invalid {what} {token:?}")))
}

/// Parses the DIMACS ASCII clique format. Vertex ids are 1-based in the file
/// and 0-based in the returned graph; labels keep the original ids.
pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<LoadedGraph> {
    let mut list: Option<EdgeList> = None;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if list.is_some() {
                    return Err(parse_error(line_no, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_error(
                            line_no,
                            format!("unsupported problem type {:?}", other.unwrap_or("")),
                        ))
                    }
                }
                let n = parse_int(tokens.next(), line_no, "vertex count")?;
                // The declared edge count is checked for syntax only; files often repeat edges.
                parse_int(tokens.next(), line_no, "edge count")?;
                if n > Vertex::MAX as u64 {
                    return Err(parse_error(line_no, format!("vertex count {n} too large")));
                }
                list = Some(EdgeList::new(n as usize));
            }
            Some("e") => {
                let list = list
                    .as_mut()
                    .ok_or_else(|| parse_error(line_no, "edge before problem line"))?;
                let mut endpoint = |what| -> Result<Vertex> {
                    let id = parse_int(tokens.next(), line_no, what)?;
                    if id == 0 || id > list.n as u64 {
                        return Err(parse_error(
                            line_no,
                            format!("vertex {id} out of range 1..={}", list.n),
                        ));
                    }
                    Ok((id - 1) as Vertex)
                };
                let u = endpoint("edge endpoint")?;
                let v = endpoint("edge endpoint")?;
                list.push(u, v);
            }
            Some(other) => {
                return Err(parse_error(line_no, format!("unknown record type {other:?}")));
            }
        }
    }
    let list = list.ok_or_else(|| parse_error(0, "missing problem line"))?;
    let labels = (1..=list.n as u64).collect();
    Ok(LoadedGraph {
        graph: build_csr(&list)?,
        labels,
    })
}

/// Parses a whitespace-separated edge list. Ids are arbitrary non-negative
/// integers, compacted to `0..n` in first-seen order. Lines starting with `#`
/// or `%` are comments; tokens after the first two on a line are ignored.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph> {
    let mut index: HashMap<u64, Vertex> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |id: u64| -> Vertex {
        *index.entry(id).or_insert_with(|| {
            labels.push(id);
            (labels.len() - 1) as Vertex
        })
    };
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let u = parse_int(tokens.next(), line_no, "vertex id")?;
        let v = parse_int(tokens.next(), line_no, "vertex id")?;
        let (u, v) = (intern(u), intern(v));
        edges.push((u, v));
    }
    let list = EdgeList::with_edges(labels.len(), edges);
    Ok(LoadedGraph {
        graph: build_csr(&list)?,
        labels,
    })
}

/// Writes the graph in DIMACS format with 1-based ids.
pub fn write_dimacs<W: Write>(graph: &CsrGraph, mut out: W) -> Result<()> {
    writeln!(out, "p edge {} {}", graph.vertex_count(), graph.edge_count())?;
    for (u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

/// Writes one `u v` line per undirected edge using internal (0-based) ids.
pub fn write_edge_list<W: Write>(graph: &CsrGraph, mut out: W) -> Result<()> {
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn write_graph(path: &Path, graph: &CsrGraph, format: GraphFormat) -> Result<()> {
    let mut out = std::io::BufWriter::new(File::create(path)?);
    match format {
        GraphFormat::Dimacs => write_dimacs(graph, &mut out)?,
        GraphFormat::EdgeList => write_edge_list(graph, &mut out)?,
    }
    out.flush().map_err(Error::from)
}
