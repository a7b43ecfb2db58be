//! Deterministic base-graph families.

use std::fmt;
use std::str::FromStr;

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::rng;

/// Maximum degree of [`BaseKind::RandomTree`] samples.
pub const RANDOM_TREE_MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    Path,
    Cycle,
    Star,
    Complete,
    BinaryTree,
    TwoCliqueBridge,
    Grid,
    RandomTree,
}

impl BaseKind {
    pub const ALL: [BaseKind; 8] = [
        BaseKind::Path,
        BaseKind::Cycle,
        BaseKind::Star,
        BaseKind::Complete,
        BaseKind::BinaryTree,
        BaseKind::TwoCliqueBridge,
        BaseKind::Grid,
        BaseKind::RandomTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaseKind::Path => "path",
            BaseKind::Cycle => "cycle",
            BaseKind::Star => "star",
            BaseKind::Complete => "complete",
            BaseKind::BinaryTree => "binary_tree",
            BaseKind::TwoCliqueBridge => "two_clique_bridge",
            BaseKind::Grid => "grid",
            BaseKind::RandomTree => "random_tree",
        }
    }

    pub fn needs_seed(self) -> bool {
        self == BaseKind::RandomTree
    }
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BaseKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = BaseKind::ALL.iter().map(|k| k.name()).collect();
                Error::param(format!("unknown graph kind `{s}` (expected one of {})", names.join(", ")))
            })
    }
}

/// Generate a connected base graph of the given shape.
///
/// `grid` with `n` vertices uses `r x (n / r)` where `r` is the largest divisor
/// of `n` not exceeding `sqrt(n)`; vertex `(i, j)` gets label `i * cols + j`.
/// `random_tree` attaches vertex `i` to a uniformly chosen earlier vertex whose
/// degree is still below [`RANDOM_TREE_MAX_DEGREE`].
pub fn generate_base(kind: BaseKind, n: usize, seed: Option<u64>) -> Result<Graph> {
    if n == 0 {
        return Err(Error::param("n must be at least 1"));
    }
    match kind {
        BaseKind::Path => path(n),
        BaseKind::Cycle => {
            if n < 3 {
                return Err(Error::param("cycle requires n >= 3"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        BaseKind::Star => Graph::from_edges(n, (1..n).map(|i| (0, i))),
        BaseKind::Complete => complete(n),
        BaseKind::BinaryTree => {
            if !(n + 1).is_power_of_two() {
                return Err(Error::param(format!("binary_tree requires n = 2^h - 1, got {n}")));
            }
            Graph::from_edges(n, (1..n).map(|i| ((i - 1) / 2, i)))
        }
        BaseKind::TwoCliqueBridge => {
            if n % 2 != 0 || n < 2 {
                return Err(Error::param(format!("two_clique_bridge requires even n >= 2, got {n}")));
            }
            let h = n / 2;
            let left = (0..h).flat_map(|i| (i + 1..h).map(move |j| (i, j)));
            let right = (h..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            Graph::from_edges(n, left.chain(right).chain(std::iter::once((h - 1, h))))
        }
        BaseKind::Grid => {
            let mut rows = 1;
            let mut r = 1;
            while r * r <= n {
                if n % r == 0 {
                    rows = r;
                }
                r += 1;
            }
            grid(rows, n / rows)
        }
        BaseKind::RandomTree => {
            let seed = seed.ok_or_else(|| Error::param("random_tree requires a seed"))?;
            random_tree(n, seed)
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    let n = rows * cols;
    let mut edges = Vec::with_capacity(2 * n);
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(n, edges)
}

fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = rng::from_seed(seed);
    let mut degree = vec![0usize; n];
    let mut open = vec![0usize];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let slot = rng.random_range(0..open.len());
        let u = open[slot];
        edges.push((u, v));
        degree[u] += 1;
        degree[v] = 1;
        if degree[u] == RANDOM_TREE_MAX_DEGREE {
            open.swap_remove(slot);
        }
        open.push(v);
    }
    Graph::from_edges(n, edges)
}
