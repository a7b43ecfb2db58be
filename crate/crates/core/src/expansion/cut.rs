use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph_core::Graph;

/// Cut statistics of a vertex set `S` with respect to the lazy walk.
///
/// Serialized field names follow the usual notation: `S`, `e_S`, `pi_S`, ...
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutStats {
    #[serde(rename = "S")]
    pub set: Vec<usize>,
    pub size: usize,
    /// Edges with both endpoints in `S`.
    #[serde(rename = "e_S")]
    pub e_s: usize,
    pub boundary_edges: usize,
    /// `|N(S)|`: vertices outside `S` with a neighbour in `S`.
    pub neighborhood: usize,
    #[serde(rename = "pi_S")]
    pub pi_s: f64,
    #[serde(rename = "Q_S")]
    pub q_s: f64,
    #[serde(rename = "phi_S")]
    pub phi_s: f64,
    #[serde(skip)]
    pub graph_edges: usize,
}

impl CutStats {
    /// `2 e(S) + |∂S|`, the degree sum of `S`.
    pub fn volume(&self) -> usize {
        2 * self.e_s + self.boundary_edges
    }

    pub fn pi_exact(&self) -> Ratio<u64> {
        Ratio::new(self.volume() as u64, 2 * self.graph_edges as u64)
    }

    pub fn pi_complement_exact(&self) -> Ratio<u64> {
        Ratio::from_integer(1) - self.pi_exact()
    }

    pub fn q_exact(&self) -> Ratio<u64> {
        Ratio::new(self.boundary_edges as u64, 4 * self.graph_edges as u64)
    }

    /// `Q(S) / (π(S) π(Sᶜ))`.
    pub fn phi_via_flow(&self) -> f64 {
        let pi = self.volume() as f64 / (2 * self.graph_edges) as f64;
        let q = self.boundary_edges as f64 / (4 * self.graph_edges) as f64;
        q / (pi * (1.0 - pi))
    }

    /// `|∂S| / (2 (2e(S) + |∂S|) π(Sᶜ))`.
    pub fn phi_via_boundary(&self) -> f64 {
        let pi_c = (2 * self.graph_edges - self.volume()) as f64 / (2 * self.graph_edges) as f64;
        self.boundary_edges as f64 / (2.0 * self.volume() as f64 * pi_c)
    }
}

/// Exact cut statistics of a proper non-empty subset `S` of the vertices.
pub fn cut_stats(g: &Graph, set: &[usize]) -> Result<CutStats> {
    let member = g.membership(set)?;
    if set.is_empty() || set.len() == g.n() {
        return Err(Error::domain("cut statistics need a proper non-empty subset"));
    }
    if g.m() == 0 {
        return Err(Error::domain("cut statistics need at least one edge"));
    }
    let mut inside2 = 0;
    let mut boundary = 0;
    let mut outside_nb = vec![false; g.n()];
    for &u in set {
        for &w in g.neighbors(u) {
            if member[w] {
                inside2 += 1;
            } else {
                boundary += 1;
                outside_nb[w] = true;
            }
        }
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    let mut stats = CutStats {
        set: sorted,
        size: set.len(),
        e_s: inside2 / 2,
        boundary_edges: boundary,
        neighborhood: outside_nb.iter().filter(|&&b| b).count(),
        pi_s: 0.0,
        q_s: boundary as f64 / (4 * g.m()) as f64,
        phi_s: 0.0,
        graph_edges: g.m(),
    };
    stats.pi_s = stats.volume() as f64 / (2 * g.m()) as f64;
    stats.phi_s = stats.phi_via_flow();
    Ok(stats)
}
