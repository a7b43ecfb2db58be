//! Small-graph corpora used by exhaustive checks.

use std::collections::BTreeSet;

use rand::Rng as _;

use super::{generators, Graph};
use crate::rng;

/// One representative of every isomorphism class of trees on `n` vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for attach in 0..size - 1 {
                let mut grown = edges.clone();
                grown.push((attach, size - 1));
                let g = Graph::from_edges(size, grown.iter().copied()).expect("tree edges");
                if seen.insert(tree_canonical_form(&g)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|e| Graph::from_edges(n, e).expect("tree edges"))
        .collect()
}

/// Canonical string of a tree: AHU encoding rooted at the center (the smaller
/// encoding of the two when the center is an edge).
pub fn tree_canonical_form(g: &Graph) -> String {
    let n = g.n();
    if n <= 2 {
        return format!("n{n}");
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in g.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode_rooted(g, c, usize::MAX))
        .min()
        .unwrap()
}

fn encode_rooted(g: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode_rooted(g, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Seeded connected graphs on 4..=`max_n` vertices: a random recursive tree
/// plus independent extra edges with a per-graph density in [0.1, 0.5).
pub fn random_connected_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let mut rng = rng::stream(seed, &[rng::tag::BASE, i as u64]);
            let n = rng.random_range(4..=max_n.max(4));
            let density = rng.random_range(0.1..0.5);
            let mut edges = BTreeSet::new();
            for v in 1..n {
                edges.insert((rng.random_range(0..v), v));
            }
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(density) {
                        edges.insert((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).expect("simple edges")
        })
        .collect()
}

/// The exhaustive-check corpus: every tree on at most 9 vertices, cycles
/// C4..C9, stars K_{1,3}..K_{1,8}, the 3x3 grid and 50 seeded random
/// connected graphs with at most 12 vertices.
pub fn small_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=9 {
        for (i, t) in all_trees(n).into_iter().enumerate() {
            out.push((format!("tree{n}.{i}"), t));
        }
    }
    for n in 4..=9 {
        out.push((format!("cycle{n}"), generators::generate_base(generators::BaseKind::Cycle, n, None).unwrap()));
    }
    for leaves in 3..=8 {
        out.push((
            format!("star{leaves}"),
            generators::generate_base(generators::BaseKind::Star, leaves + 1, None).unwrap(),
        ));
    }
    out.push(("grid3x3".into(), generators::grid(3, 3).unwrap()));
    for (i, g) in random_connected_graphs(50, 12, 0x5eed).into_iter().enumerate() {
        out.push((format!("random{i}"), g));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts_match_known_sequence() {
        // Unlabeled free trees: 1, 1, 1, 2, 3, 6, 11, 23, 47.
        let counts: Vec<usize> = (1..=9).map(|n| all_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        for t in all_trees(8) {
            assert_eq!(t.m(), 7);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn random_graphs_are_connected_and_reproducible() {
        let a = random_connected_graphs(50, 12, 1);
        assert_eq!(a, random_connected_graphs(50, 12, 1));
        assert!(a.iter().all(|g| g.is_connected() && g.n() <= 12 && g.n() >= 4));
    }
}
