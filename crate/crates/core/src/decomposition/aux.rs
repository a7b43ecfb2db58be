use std::collections::BTreeMap;

use super::BlobPartition;
use crate::error::{Error, Result};
use crate::graph_core::Graph;

/// Graph on blobs plus one witness edge per auxiliary edge.
#[derive(Debug, Clone)]
pub struct AuxiliaryGraph {
    pub graph: Graph,
    /// For blobs `i < j`: the lexicographically least edge `(x, y)` with
    /// `x ∈ V_i`, `y ∈ V_j`.
    pub witnesses: BTreeMap<(usize, usize), (usize, usize)>,
}

impl AuxiliaryGraph {
    /// Witness oriented from blob `i` to blob `j`.
    pub fn witness(&self, i: usize, j: usize) -> Option<(usize, usize)> {
        if i < j {
            self.witnesses.get(&(i, j)).copied()
        } else {
            self.witnesses.get(&(j, i)).map(|&(x, y)| (y, x))
        }
    }
}

pub fn auxiliary_blob_graph(g: &Graph, part: &BlobPartition) -> Result<AuxiliaryGraph> {
    if part.blob_of.len() != g.n() {
        return Err(Error::param("partition does not match the graph's vertex count"));
    }
    let mut witnesses = BTreeMap::new();
    for (u, v) in g.edges() {
        let (bu, bv) = (part.blob_of[u], part.blob_of[v]);
        if bu == bv {
            continue;
        }
        let key = (bu.min(bv), bu.max(bv));
        let oriented = if bu < bv { (u, v) } else { (v, u) };
        witnesses
            .entry(key)
            .and_modify(|w: &mut (usize, usize)| {
                if (oriented.0.min(oriented.1), oriented.0.max(oriented.1)) < (w.0.min(w.1), w.0.max(w.1)) {
                    *w = oriented;
                }
            })
            .or_insert(oriented);
    }
    let graph = Graph::from_edges(part.t(), witnesses.keys().copied())?;
    Ok(AuxiliaryGraph { graph, witnesses })
}
