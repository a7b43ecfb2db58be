//! Long paths: an exact subset-DP oracle for small graphs and the blob
//! heuristic for perturbed graphs.

mod exact;
mod heuristic;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph_core::Graph;

pub use exact::{longest_path_exact, LONGEST_PATH_MAX_N};
pub use heuristic::{default_blob_size, long_path_blob_heuristic, HeuristicPath, DFS_RESTARTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathMethod {
    Exact,
    BlobHeuristic,
    DfsFallback,
}

impl PathMethod {
    pub fn name(self) -> &'static str {
        match self {
            PathMethod::Exact => "exact",
            PathMethod::BlobHeuristic => "blob_heuristic",
            PathMethod::DfsFallback => "dfs_fallback",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub length: usize,
    pub method: PathMethod,
}

impl PathWitness {
    pub fn new(vertices: Vec<usize>, method: PathMethod) -> Self {
        PathWitness {
            length: vertices.len().saturating_sub(1),
            vertices,
            method,
        }
    }

    /// Consecutive vertices adjacent in `g`, all vertices distinct.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.length + 1 != self.vertices.len() {
            return Err(Error::domain("path length does not match its vertex count"));
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.vertices {
            if v >= g.n() || seen[v] {
                return Err(Error::domain(format!("path repeats or leaves the graph at vertex {v}")));
            }
            seen[v] = true;
        }
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::domain(format!("path uses a non-edge {{{}, {}}}", w[0], w[1])));
            }
        }
        Ok(())
    }
}
