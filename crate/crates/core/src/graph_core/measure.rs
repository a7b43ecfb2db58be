use rayon::prelude::*;

use super::{Graph, UNREACHED};
use crate::error::Result;

/// Smallest `D` such that every subgraph has a vertex of degree at most `D`,
/// via min-degree peeling with a bucket queue.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let maxd = g.max_degree();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); maxd + 1];
    for v in 0..n {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut best = 0;
    let mut cur = 0;
    for _ in 0..n {
        // Entries may be stale; skip anything already removed or re-bucketed.
        let v = loop {
            while buckets[cur].is_empty() {
                cur += 1;
            }
            let v = buckets[cur].pop().unwrap();
            if !removed[v] && deg[v] == cur {
                break v;
            }
        };
        removed[v] = true;
        best = best.max(cur);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
                if deg[w] < cur {
                    cur = deg[w];
                }
            }
        }
    }
    best
}

/// Eccentricity of every vertex of a connected graph.
///
/// Runs 64 breadth-first searches at once: each vertex carries a word whose
/// bit `i` marks "reached from source `i` of the current batch", so a level
/// costs one pass over the adjacency lists for 64 sources.
pub fn eccentricities(g: &Graph) -> Result<Vec<usize>> {
    g.require_connected("eccentricities")?;
    let n = g.n();
    let batches: Vec<usize> = (0..n).step_by(64).collect();
    let per_batch: Vec<Vec<usize>> = batches
        .par_iter()
        .map(|&start| {
            let width = (n - start).min(64);
            let mut visited = vec![0u64; n];
            let mut frontier = vec![0u64; n];
            let mut next = vec![0u64; n];
            for i in 0..width {
                visited[start + i] |= 1 << i;
                frontier[start + i] |= 1 << i;
            }
            let mut ecc = vec![0usize; width];
            let mut level = 0;
            loop {
                let mut active = 0u64;
                for v in 0..n {
                    let mut acc = 0u64;
                    for &u in g.neighbors(v) {
                        acc |= frontier[u];
                    }
                    let fresh = acc & !visited[v];
                    next[v] = fresh;
                    active |= fresh;
                }
                if active == 0 {
                    break;
                }
                level += 1;
                let mut bits = active;
                while bits != 0 {
                    ecc[bits.trailing_zeros() as usize] = level;
                    bits &= bits - 1;
                }
                for v in 0..n {
                    visited[v] |= next[v];
                }
                std::mem::swap(&mut frontier, &mut next);
            }
            ecc
        })
        .collect();
    Ok(per_batch.into_iter().flatten().collect())
}

/// Exact diameter of a connected graph.
///
/// Keeps lower/upper eccentricity bounds per vertex and BFSes from the
/// unresolved vertex with the widest bound (alternating largest upper and
/// smallest lower). A BFS from `v` gives, for every `w`,
/// `max(d, ecc(v) - d) <= ecc(w) <= ecc(v) + d` with `d = d(v, w)`.
/// Stops once no unresolved vertex can beat the best lower bound.
/// Worst case is still n searches; on sparse random graphs it is a handful.
pub fn diameter(g: &Graph) -> Result<usize> {
    g.require_connected("diameter")?;
    let n = g.n();
    let mut lo = vec![0usize; n];
    let mut hi = vec![usize::MAX; n];
    let mut alive: Vec<usize> = (0..n).collect();
    let mut best = 0usize;
    let mut pick_high = true;
    while !alive.is_empty() {
        let &v = if pick_high {
            alive.iter().max_by_key(|&&w| (hi[w], g.degree(w))).unwrap()
        } else {
            alive.iter().min_by_key(|&&w| (lo[w], std::cmp::Reverse(g.degree(w)))).unwrap()
        };
        pick_high = !pick_high;
        let dist = g.bfs_distances(v);
        let ecc = dist.iter().copied().max().unwrap_or(0);
        best = best.max(ecc);
        lo[v] = ecc;
        hi[v] = ecc;
        for &w in &alive {
            let d = dist[w];
            lo[w] = lo[w].max(d).max(ecc.saturating_sub(d));
            hi[w] = hi[w].min(ecc + d);
            best = best.max(lo[w]);
        }
        // Resolved: bounds met, or cannot exceed what is already known.
        alive.retain(|&w| lo[w] != hi[w] && hi[w] > best);
    }
    Ok(best)
}

/// Double sweep: BFS from `start`, then BFS from the farthest vertex found.
/// Returns the two endpoints and the path between them.
pub fn double_sweep(g: &Graph, start: usize) -> (usize, usize, Vec<usize>) {
    let farthest = |src: usize| {
        let (order, parent) = g.bfs_tree(src);
        (*order.last().unwrap(), parent)
    };
    let (a, _) = farthest(start);
    let (b, parent) = farthest(a);
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent[cur];
        debug_assert_ne!(cur, UNREACHED);
        path.push(cur);
    }
    path.reverse();
    (a, b, path)
}
