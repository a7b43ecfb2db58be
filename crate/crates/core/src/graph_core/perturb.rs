use rand_distr::{Binomial, Distribution};
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::rng;

/// Parameters of the random perturbation `R ~ G(n, eps/n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerturbationParams {
    pub eps: f64,
    pub seed: u64,
    /// When set to `a`, the effective eps is `n^{-a}` and `eps` is ignored.
    pub eps_exponent: Option<f64>,
}

impl PerturbationParams {
    pub fn new(eps: f64, seed: u64) -> Self {
        PerturbationParams {
            eps,
            seed,
            eps_exponent: None,
        }
    }

    pub fn with_exponent(a: f64, seed: u64) -> Self {
        PerturbationParams {
            eps: f64::NAN,
            seed,
            eps_exponent: Some(a),
        }
    }

    /// The eps used for an `n`-vertex graph.
    pub fn eps_for(&self, n: usize) -> f64 {
        match self.eps_exponent {
            Some(a) => (n as f64).powf(-a),
            None => self.eps,
        }
    }

    pub fn validate(&self, n: usize) -> Result<f64> {
        if let Some(a) = self.eps_exponent {
            if !(a > 0.0 && a < 1.0) {
                return Err(Error::param(format!("eps exponent must lie in (0, 1), got {a}")));
            }
        }
        let eps = self.eps_for(n);
        if !eps.is_finite() || eps < 0.0 {
            return Err(Error::param(format!("eps must be a finite non-negative number, got {eps}")));
        }
        if n > 0 && eps / n as f64 >= 1.0 {
            return Err(Error::param(format!(
                "edge probability eps/n = {} must be below 1",
                eps / n as f64
            )));
        }
        Ok(eps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeOrigin {
    Base,
    Random,
    Both,
}

/// A base graph together with its sampled random edge set and their union.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbedGraph {
    pub base: Graph,
    /// Sampled pairs `(u, v)` with `u < v`, sorted. Pairs that repeat a base
    /// edge are kept here and collapse in `merged`.
    pub random_edges: Vec<(usize, usize)>,
    pub merged: Graph,
    pub eps: f64,
}

impl PerturbedGraph {
    /// Rebuild from stored parts (used when reading a serialized sample).
    pub fn from_parts(base: Graph, mut random_edges: Vec<(usize, usize)>, eps: f64) -> Result<Self> {
        for e in random_edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        random_edges.sort_unstable();
        if random_edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::param("random edge set contains a repeated pair"));
        }
        let merged = Graph::from_edges_dedup(base.n(), base.edges().chain(random_edges.iter().copied()))?;
        Ok(PerturbedGraph {
            base,
            random_edges,
            merged,
            eps,
        })
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn origin(&self, u: usize, v: usize) -> Option<EdgeOrigin> {
        let key = (u.min(v), u.max(v));
        let in_base = self.base.has_edge(u, v);
        let in_random = self.random_edges.binary_search(&key).is_ok();
        match (in_base, in_random) {
            (true, true) => Some(EdgeOrigin::Both),
            (true, false) => Some(EdgeOrigin::Base),
            (false, true) => Some(EdgeOrigin::Random),
            (false, false) => None,
        }
    }

    /// Number of sampled pairs that were not already base edges.
    pub fn new_edge_count(&self) -> usize {
        self.random_edges.iter().filter(|&&(u, v)| !self.base.has_edge(u, v)).count()
    }
}

/// Overlay `g` with a sample of `G(n, eps/n)`.
///
/// The number of random pairs is drawn from `Binomial(C(n,2), eps/n)` and that
/// many distinct pairs are then chosen uniformly, which is the same
/// distribution as independent per-pair coins but costs `O(|R|)`.
pub fn perturb(g: &Graph, params: &PerturbationParams) -> Result<PerturbedGraph> {
    let n = g.n();
    if n == 0 {
        return Err(Error::param("cannot perturb an empty graph"));
    }
    let eps = params.validate(n)?;
    let mut rng = rng::stream(params.seed, &[rng::tag::PERTURB, n as u64]);
    let pairs = (n as u64) * (n as u64 - 1) / 2;
    let p = eps / n as f64;
    let count = if pairs == 0 || p == 0.0 {
        0
    } else {
        Binomial::new(pairs, p)
            .map_err(|e| Error::param(format!("binomial parameters: {e}")))?
            .sample(&mut rng)
    };
    let length = usize::try_from(pairs).map_err(|_| Error::capability("vertex pair count exceeds usize"))?;
    let mut indices: Vec<u64> = rand::seq::index::sample(&mut rng, length, count as usize)
        .into_iter()
        .map(|i| i as u64)
        .collect();
    indices.sort_unstable();
    let random_edges = indices.into_iter().map(|k| pair_from_index(n as u64, k)).collect();
    PerturbedGraph::from_parts(g.clone(), random_edges, eps)
}

/// Map `k` in `0..C(n,2)` to the `k`-th pair `(u, v)`, `u < v`, in row-major order.
pub(crate) fn pair_from_index(n: u64, k: u64) -> (usize, usize) {
    // offset(u) = u * (2n - u - 1) / 2 is the index of pair (u, u + 1).
    let offset = |u: u64| u * (2 * n - u - 1) / 2;
    let nf = n as f64;
    let disc = (2.0 * nf - 1.0) * (2.0 * nf - 1.0) - 8.0 * k as f64;
    let mut u = (((2.0 * nf - 1.0) - disc.max(0.0).sqrt()) / 2.0).floor().max(0.0) as u64;
    u = u.min(n.saturating_sub(2));
    while u > 0 && offset(u) > k {
        u -= 1;
    }
    while u + 1 < n - 1 && offset(u + 1) <= k {
        u += 1;
    }
    let v = u + 1 + (k - offset(u));
    (u as usize, v as usize)
}
