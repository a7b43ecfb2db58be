use super::{PathMethod, PathWitness};
use crate::error::{Error, Result};
use crate::graph_core::Graph;

pub const LONGEST_PATH_MAX_N: usize = 20;

/// Maximum simple path by DP over `(vertex set, endpoint)`.
///
/// `ends[S]` is the set of vertices at which some path covering exactly `S`
/// can end (equivalently start). The returned path is the lexicographically
/// least vertex sequence among all longest paths.
pub fn longest_path_exact(g: &Graph) -> Result<PathWitness> {
    let n = g.n();
    if n > LONGEST_PATH_MAX_N {
        return Err(Error::capability(format!(
            "longest_path_exact: n = {n} exceeds {LONGEST_PATH_MAX_N}; use the blob heuristic"
        )));
    }
    if n == 0 {
        return Err(Error::domain("longest_path_exact: empty graph"));
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let full = 1usize << n;
    let mut ends = vec![0u32; full];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 1u32;
    for mask in 1..full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones());
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut ext = nbr[v] & !(mask as u32);
            while ext != 0 {
                let w = ext.trailing_zeros();
                ext &= ext - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }

    // Can a path start at `w`, avoid `used`, and cover exactly `count` vertices?
    let feasible = |w: usize, used: u32, count: u32| {
        (0..full).any(|m| m as u32 & used == 0 && m.count_ones() == count && ends[m] >> w & 1 == 1)
    };
    let mut path = Vec::with_capacity(best as usize);
    let mut used = 0u32;
    let first = (0..n).find(|&w| feasible(w, 0, best)).expect("a longest path exists");
    path.push(first);
    used |= 1 << first;
    while path.len() < best as usize {
        let cur = *path.last().unwrap();
        let remaining = best - path.len() as u32;
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&w| used >> w & 1 == 0)
            .find(|&w| feasible(w, used, remaining))
            .expect("extension exists by construction");
        path.push(next);
        used |= 1 << next;
    }
    Ok(PathWitness::new(path, PathMethod::Exact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::corpus::small_corpus;
    use crate::graph_core::{generate_base, BaseKind};

    fn brute(g: &Graph) -> usize {
        fn dfs(g: &Graph, v: usize, seen: &mut Vec<bool>, len: usize, best: &mut usize) {
            *best = (*best).max(len);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    dfs(g, w, seen, len + 1, best);
                    seen[w] = false;
                }
            }
        }
        let mut best = 0;
        for s in 0..g.n() {
            let mut seen = vec![false; g.n()];
            seen[s] = true;
            dfs(g, s, &mut seen, 0, &mut best);
        }
        best
    }

    #[test]
    fn examples() {
        let p5 = generate_base(BaseKind::Path, 5, None).unwrap();
        let w = longest_path_exact(&p5).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        let star = generate_base(BaseKind::Star, 7, None).unwrap();
        assert_eq!(longest_path_exact(&star).unwrap().vertices, vec![1, 0, 2]);
        let bt = generate_base(BaseKind::BinaryTree, 15, None).unwrap();
        assert_eq!(longest_path_exact(&bt).unwrap().length, 6);
        let k1 = Graph::empty(1);
        assert_eq!(longest_path_exact(&k1).unwrap().length, 0);
        let big = generate_base(BaseKind::Path, 21, None).unwrap();
        assert!(matches!(longest_path_exact(&big), Err(Error::Capability(_))));
    }

    #[test]
    fn matches_brute_force_on_corpus() {
        for (name, g) in small_corpus() {
            let w = longest_path_exact(&g).unwrap();
            w.validate(&g).unwrap();
            assert_eq!(w.length, brute(&g), "{name}");
        }
    }
}
