//! Blob heuristic: partition the base graph, find a long path in the
//! auxiliary blob graph by randomized depth-first search, then expand it
//! into the merged graph by routing inside each blob.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{PathMethod, PathWitness};
use crate::decomposition::{auxiliary_blob_graph, blob_partition, BlobPartition};
use crate::error::{Error, Result};
use crate::graph_core::{double_sweep, Graph, PerturbedGraph};
use crate::rng::{stream, tag, Rng};

pub const DFS_RESTARTS: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeuristicPath {
    pub path: PathWitness,
    /// Edge count of the auxiliary path that was expanded.
    pub aux_length: usize,
    pub k: usize,
    pub t: usize,
}

/// `⌈4/ε⌉`, capped at `n`.
pub fn default_blob_size(eps: f64, n: usize) -> Result<usize> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::param(format!("default blob size needs eps > 0, got {eps}")));
    }
    Ok(((4.0 / eps).ceil() as usize).clamp(1, n.max(1)))
}

/// Deepest root-to-node path of one randomized DFS.
fn deepest_dfs_path(g: &Graph, root: usize, rng: &mut Rng) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let shuffled = |v: usize, rng: &mut Rng| {
        let mut nb = g.neighbors(v).to_vec();
        nb.shuffle(rng);
        nb
    };
    seen[root] = true;
    let mut path = vec![root];
    let mut pending = vec![shuffled(root, rng)];
    let mut best = path.clone();
    while let Some(top) = pending.last_mut() {
        match top.pop() {
            Some(w) if !seen[w] => {
                seen[w] = true;
                path.push(w);
                if path.len() > best.len() {
                    best.clone_from(&path);
                }
                let nb = shuffled(w, rng);
                pending.push(nb);
            }
            Some(_) => {}
            None => {
                pending.pop();
                path.pop();
            }
        }
    }
    best
}

/// One restart: DFS from a random root, then again from the deepest node reached.
fn restart(g: &Graph, seed: u64, index: usize) -> Vec<usize> {
    let mut rng = stream(seed, &[tag::LONGPATH, index as u64]);
    let root = rng.random_range(0..g.n());
    let first = deepest_dfs_path(g, root, &mut rng);
    let second = deepest_dfs_path(g, *first.last().unwrap(), &mut rng);
    if second.len() >= first.len() {
        second
    } else {
        first
    }
}

fn longest_aux_path(aux: &Graph, seed: u64) -> Vec<usize> {
    (0..DFS_RESTARTS)
        .into_par_iter()
        .map(|i| restart(aux, seed, i))
        .collect::<Vec<_>>()
        .into_iter()
        .min_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)))
        .unwrap()
}

/// BFS inside blob `b`; returns parents (usize::MAX outside or unreached) and the last vertex dequeued.
fn blob_bfs(g: &Graph, part: &BlobPartition, b: usize, src: usize) -> (Vec<usize>, usize) {
    let mut parent = vec![usize::MAX; g.n()];
    parent[src] = src;
    let mut queue = VecDeque::from([src]);
    let mut last = src;
    while let Some(u) = queue.pop_front() {
        last = u;
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX && part.blob_of[w] == b {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    (parent, last)
}

/// Route from `src` to `dst` (both in blob `b`), inclusive.
fn route(parent: &[usize], src: usize, dst: usize) -> Vec<usize> {
    let mut out = vec![dst];
    let mut cur = dst;
    while cur != src {
        cur = parent[cur];
        out.push(cur);
    }
    out.reverse();
    out
}

pub fn long_path_blob_heuristic(pg: &PerturbedGraph, k: usize, seed: u64) -> Result<HeuristicPath> {
    let part = blob_partition(&pg.base, k)?;
    let aux = auxiliary_blob_graph(&pg.merged, &part)?;
    let g = &pg.merged;
    let blobs = longest_aux_path(&aux.graph, seed);
    let aux_length = blobs.len() - 1;
    let t = part.t();
    if aux_length == 0 {
        let (_, _, p) = double_sweep(g, 0);
        return Ok(HeuristicPath {
            path: PathWitness::new(p, PathMethod::DfsFallback),
            aux_length,
            k,
            t,
        });
    }
    let mut out: Vec<usize> = Vec::new();
    let mut entry: Option<usize> = None;
    for (i, &b) in blobs.iter().enumerate() {
        let exit = blobs.get(i + 1).map(|&nb| aux.witness(b, nb).expect("aux edge has a witness"));
        match (entry, exit) {
            (None, Some((x, _))) => {
                // First blob: start from the vertex farthest from the exit.
                let (parent, far) = blob_bfs(g, &part, b, x);
                let mut seg = route(&parent, x, far);
                seg.reverse();
                out.extend(seg);
            }
            (Some(y), Some((x, _))) => {
                let (parent, _) = blob_bfs(g, &part, b, y);
                out.extend(route(&parent, y, x));
            }
            (Some(y), None) => {
                let (parent, far) = blob_bfs(g, &part, b, y);
                out.extend(route(&parent, y, far));
            }
            (None, None) => unreachable!("aux path has at least two blobs"),
        }
        entry = exit.map(|(_, y)| y);
    }
    let path = PathWitness::new(out, PathMethod::BlobHeuristic);
    debug_assert!(path.validate(g).is_ok());
    assert!(path.length >= aux_length, "expanded path shorter than the auxiliary path");
    Ok(HeuristicPath { path, aux_length, k, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{generate_base, perturb, BaseKind, PerturbationParams};

    #[test]
    fn unperturbed_path_is_recovered() {
        let base = generate_base(BaseKind::Path, 30, None).unwrap();
        let pg = perturb(&base, &PerturbationParams::new(0.0, 1)).unwrap();
        let h = long_path_blob_heuristic(&pg, 3, 5).unwrap();
        assert_eq!(h.t, 10);
        assert_eq!(h.aux_length, 9);
        assert_eq!(h.path.length, 29);
        h.path.validate(&pg.merged).unwrap();
    }

    #[test]
    fn single_blob_falls_back() {
        let base = generate_base(BaseKind::Star, 50, None).unwrap();
        let pg = perturb(&base, &PerturbationParams::new(0.5, 2)).unwrap();
        let h = long_path_blob_heuristic(&pg, 8, 2).unwrap();
        assert_eq!(h.path.method, PathMethod::DfsFallback);
        h.path.validate(&pg.merged).unwrap();
    }

    #[test]
    fn valid_and_deterministic_on_perturbed_trees() {
        let base = generate_base(BaseKind::BinaryTree, 255, None).unwrap();
        for seed in 0..5 {
            let pg = perturb(&base, &PerturbationParams::new(0.8, seed)).unwrap();
            let a = long_path_blob_heuristic(&pg, 5, seed).unwrap();
            a.path.validate(&pg.merged).unwrap();
            assert!(a.path.length >= a.aux_length);
            assert_eq!(a, long_path_blob_heuristic(&pg, 5, seed).unwrap());
        }
    }

    #[test]
    fn blob_size_default() {
        assert_eq!(default_blob_size(0.8, 1000).unwrap(), 5);
        assert_eq!(default_blob_size(0.01, 100).unwrap(), 100);
        assert!(default_blob_size(0.0, 10).is_err());
    }
}
