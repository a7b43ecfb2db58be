//! Edge-list text format and the JSON form of a perturbed sample.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with `u < v`, ASCII
//! decimal, each newline-terminated. The writer emits edges sorted.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Graph, PerturbedGraph};
use crate::error::{Error, Result};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(12 * (g.m() + 1));
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let (n, m) = parse_pair(header, 1)?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let (u, v) = parse_pair(line, idx + 1)?;
        if u >= v {
            return Err(Error::Parse(format!("line {}: expected u < v, got `{}`", idx + 1, line.trim())));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: expected two integers")))?
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("line {lineno}: {e}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse(format!("line {lineno}: trailing tokens")));
    }
    Ok((a, b))
}

/// Serialized form of a [`PerturbedGraph`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PerturbedGraphFile {
    pub n: usize,
    pub eps: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub base_edges: Vec<(usize, usize)>,
    pub random_edges: Vec<(usize, usize)>,
}

impl PerturbedGraphFile {
    pub fn from_graph(pg: &PerturbedGraph, seed: Option<u64>) -> Self {
        PerturbedGraphFile {
            n: pg.n(),
            eps: pg.eps,
            seed,
            base_edges: pg.base.edges().collect(),
            random_edges: pg.random_edges.clone(),
        }
    }

    pub fn into_graph(self) -> Result<PerturbedGraph> {
        let base = Graph::from_edges(self.n, self.base_edges)?;
        PerturbedGraph::from_parts(base, self.random_edges, self.eps)
    }
}

/// What a graph-consuming command found on disk.
pub enum LoadedGraph {
    Plain(Graph),
    Perturbed(PerturbedGraph),
}

impl LoadedGraph {
    /// The graph analyses run on: the merged graph for perturbed samples.
    pub fn working(&self) -> &Graph {
        match self {
            LoadedGraph::Plain(g) => g,
            LoadedGraph::Perturbed(pg) => &pg.merged,
        }
    }
}

/// Load an edge list or a perturbed-sample JSON file (detected by content).
pub fn load_graph(path: &Path) -> Result<LoadedGraph> {
    let text = std::fs::read_to_string(path).map_err(Error::file(path))?;
    if text.trim_start().starts_with('{') {
        let file: PerturbedGraphFile = serde_json::from_str(&text)?;
        Ok(LoadedGraph::Perturbed(file.into_graph()?))
    } else {
        Ok(LoadedGraph::Plain(read_edge_list(&text)?))
    }
}
