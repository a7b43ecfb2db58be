use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlobPartition {
    /// Blobs in cut order, each sorted ascending.
    pub blobs: Vec<Vec<usize>>,
    pub blob_of: Vec<usize>,
    pub k: usize,
    /// Maximum degree of the partitioned graph (at least 1).
    pub delta: usize,
}

/// On-disk form: sorted blobs, `k`, `t` and `Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlobPartitionJson {
    pub blobs: Vec<Vec<usize>>,
    pub k: usize,
    pub t: usize,
    pub delta: usize,
}

impl BlobPartition {
    pub fn t(&self) -> usize {
        self.blobs.len()
    }

    pub fn to_json(&self) -> BlobPartitionJson {
        BlobPartitionJson {
            blobs: self.blobs.clone(),
            k: self.k,
            t: self.t(),
            delta: self.delta,
        }
    }

    pub fn from_json(j: BlobPartitionJson, n: usize) -> Result<Self> {
        let mut blob_of = vec![usize::MAX; n];
        for (i, b) in j.blobs.iter().enumerate() {
            for &v in b {
                if v >= n || blob_of[v] != usize::MAX {
                    return Err(Error::param(format!("blob {i}: vertex {v} out of range or repeated")));
                }
                blob_of[v] = i;
            }
        }
        if blob_of.contains(&usize::MAX) {
            return Err(Error::param("blobs do not cover every vertex"));
        }
        Ok(BlobPartition {
            blobs: j.blobs,
            blob_of,
            k: j.k,
            delta: j.delta,
        })
    }

    /// Checks every partition invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let bad = |msg: String| Err(Error::domain(format!("blob partition: {msg}")));
        if self.blob_of.len() != n {
            return bad(format!("blob_of has {} entries for {n} vertices", self.blob_of.len()));
        }
        let mut seen = vec![false; n];
        for (i, b) in self.blobs.iter().enumerate() {
            for &v in b {
                if v >= n || seen[v] || self.blob_of[v] != i {
                    return bad(format!("vertex {v} misassigned in blob {i}"));
                }
                seen[v] = true;
            }
            if b.len() < self.k || b.len() > self.delta * self.k {
                return bad(format!("blob {i} has size {} outside [{}, {}]", b.len(), self.k, self.delta * self.k));
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return bad(format!("vertex {v} is in no blob"));
        }
        let mut reached = vec![false; n];
        for (i, b) in self.blobs.iter().enumerate() {
            let Some(&start) = b.first() else {
                return bad(format!("blob {i} is empty"));
            };
            reached[start] = true;
            let mut stack = vec![start];
            let mut count = 1;
            while let Some(u) = stack.pop() {
                for &w in g.neighbors(u) {
                    if !reached[w] && self.blob_of[w] == i {
                        reached[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            if count != b.len() {
                return bad(format!("blob {i} is not connected"));
            }
        }
        let t = self.t();
        if t * self.k > n || t * self.delta * self.k < n {
            return bad(format!("t = {t} outside [n/(Δk), n/k]"));
        }
        Ok(())
    }
}

/// Deepest-subtree-first partition of a BFS tree rooted at 0.
///
/// Vertices are processed in reverse BFS order with a running residual
/// subtree size; a vertex whose residual subtree reaches `k` is cut off with
/// it. A cut subtree has at most `1 + Δ(k-1)` vertices because each child's
/// residual is below `k`. The leftover part around the root (below `k`) joins
/// the most recently cut blob hanging from it by a tree edge.
pub fn blob_partition(g: &Graph, k: usize) -> Result<BlobPartition> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::param(format!("blob_partition: need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    g.require_connected("blob_partition")?;
    let (order, parent) = g.bfs_tree(0);
    let mut residual = vec![1usize; n];
    let mut is_cut = vec![false; n];
    let mut cut_roots = Vec::new();
    for &v in order.iter().rev() {
        if residual[v] >= k {
            is_cut[v] = true;
            cut_roots.push(v);
        } else if v != 0 {
            residual[parent[v]] += residual[v];
        }
    }
    let mut blob_id = vec![usize::MAX; n];
    for (i, &r) in cut_roots.iter().enumerate() {
        blob_id[r] = i;
    }
    // Vertices reachable from the root without crossing a cut.
    let mut in_leftover = vec![false; n];
    for &v in &order {
        in_leftover[v] = !is_cut[v] && (v == 0 || in_leftover[parent[v]]);
    }
    let leftover = (!is_cut[0]).then(|| {
        let r = cut_roots
            .iter()
            .rev()
            .find(|&&r| in_leftover[parent[r]])
            .expect("some cut subtree hangs off the leftover");
        blob_id[*r]
    });
    let mut blob_of = vec![0usize; n];
    for &v in &order {
        blob_of[v] = if is_cut[v] {
            blob_id[v]
        } else if v == 0 {
            leftover.unwrap()
        } else {
            blob_of[parent[v]]
        };
    }
    let mut blobs = vec![Vec::new(); cut_roots.len()];
    for v in 0..n {
        blobs[blob_of[v]].push(v);
    }
    Ok(BlobPartition {
        blobs,
        blob_of,
        k,
        delta: g.max_degree().max(1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{generate_base, BaseKind};

    #[test]
    fn path10_k3() {
        let g = generate_base(BaseKind::Path, 10, None).unwrap();
        let p = blob_partition(&g, 3).unwrap();
        p.validate(&g).unwrap();
        assert_eq!(p.blobs[0], vec![7, 8, 9]);
        assert_eq!(p.blobs, vec![vec![7, 8, 9], vec![4, 5, 6], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn k1_gives_singletons() {
        let g = generate_base(BaseKind::Grid, 12, None).unwrap();
        let p = blob_partition(&g, 1).unwrap();
        p.validate(&g).unwrap();
        assert_eq!(p.t(), 12);
    }

    #[test]
    fn binary_tree_k2() {
        let g = generate_base(BaseKind::BinaryTree, 15, None).unwrap();
        let p = blob_partition(&g, 2).unwrap();
        assert_eq!(p.delta, 3);
        p.validate(&g).unwrap();
        assert!(p.blobs.iter().all(|b| (2..=6).contains(&b.len())));
    }

    #[test]
    fn whole_graph_and_errors() {
        let g = generate_base(BaseKind::Star, 7, None).unwrap();
        let p = blob_partition(&g, 7).unwrap();
        assert_eq!(p.t(), 1);
        p.validate(&g).unwrap();
        assert!(matches!(blob_partition(&g, 8), Err(Error::Parameter(_))));
        assert!(matches!(blob_partition(&g, 0), Err(Error::Parameter(_))));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(blob_partition(&split, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn json_roundtrip() {
        let g = generate_base(BaseKind::Path, 10, None).unwrap();
        let p = blob_partition(&g, 3).unwrap();
        let text = serde_json::to_string(&p.to_json()).unwrap();
        let back = BlobPartition::from_json(serde_json::from_str(&text).unwrap(), 10).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn large_path_and_random_trees() {
        let g = generate_base(BaseKind::Path, 100_000, None).unwrap();
        for k in [1, 7, 1000, 50_000] {
            blob_partition(&g, k).unwrap().validate(&g).unwrap();
        }
        for seed in 0..5 {
            let t = generate_base(BaseKind::RandomTree, 5_000, Some(seed)).unwrap();
            for k in [2, 5, 40, 2500] {
                blob_partition(&t, k).unwrap().validate(&t).unwrap();
            }
        }
    }
}
