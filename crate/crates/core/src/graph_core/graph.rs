use std::collections::VecDeque;

use crate::error::{Error, Result};

pub const UNREACHED: usize = usize::MAX;

/// Undirected simple graph on vertices `0..n` stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Build from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_pair(n, u, v)?;
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::param(format!("duplicate edge {{{}, {}}}", u.min(w[0]), u.max(w[0]))));
            }
            m2 += list.len();
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    /// Build from an edge list, collapsing repeated pairs into one edge.
    /// Self-loops and out-of-range endpoints are still rejected.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_pair(n, u, v)?;
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Breadth-first distances from `src`; unreachable vertices get [`UNREACHED`].
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHED; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNREACHED {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// BFS tree from `src`: returns (visit order, parent) with `parent[src] == src`.
    pub fn bfs_tree(&self, src: usize) -> (Vec<usize>, Vec<usize>) {
        let mut parent = vec![UNREACHED; self.n()];
        let mut order = Vec::with_capacity(self.n());
        parent[src] = src;
        order.push(src);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in &self.adj[u] {
                if parent[w] == UNREACHED {
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        (order, parent)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_tree(0).0.len() == self.n()
    }

    /// Whether the subgraph induced by `members` (a membership mask) is connected.
    /// The empty set counts as connected.
    pub fn is_connected_within(&self, members: &[bool]) -> bool {
        let Some(start) = members.iter().position(|&b| b) else {
            return true;
        };
        let total = members.iter().filter(|&&b| b).count();
        let mut seen = vec![false; self.n()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if members[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == total
    }

    /// Component label per vertex, labels assigned in order of smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![UNREACHED; self.n()];
        let mut next = 0;
        for s in 0..self.n() {
            if comp[s] != UNREACHED {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == UNREACHED {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Membership mask for a vertex list, validating labels and rejecting repeats.
    pub fn membership(&self, set: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.n()];
        for &v in set {
            if v >= self.n() {
                return Err(Error::param(format!("vertex {v} out of range for n = {}", self.n())));
            }
            if mask[v] {
                return Err(Error::param(format!("vertex {v} repeated in set")));
            }
            mask[v] = true;
        }
        Ok(mask)
    }

    pub(crate) fn require_connected(&self, what: &str) -> Result<()> {
        if self.n() == 0 {
            return Err(Error::domain(format!("{what}: graph has no vertices")));
        }
        if !self.is_connected() {
            return Err(Error::domain(format!("{what}: graph is disconnected")));
        }
        Ok(())
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(Error::param(format!("edge {{{u}, {v}}} out of range for n = {n}")));
    }
    if u == v {
        return Err(Error::param(format!("self-loop at {u}")));
    }
    Ok(())
}
