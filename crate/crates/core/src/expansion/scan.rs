//! Exhaustive subset scans in Gray-code order.
//!
//! Consecutive Gray codes differ in one vertex, so `|S|`, `|∂S|`, `|N(S)|` and
//! the degree sum are maintained in `O(deg)` per step. The code range is cut
//! into contiguous chunks; each chunk rebuilds its starting state from scratch
//! and chunks are reduced with a caller-supplied merge.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph_core::Graph;

/// Largest vertex count for all-subset scans.
pub const EXHAUSTIVE_MAX_N: usize = 24;

/// Incrementally maintained statistics of the current subset.
#[derive(Debug, Clone)]
pub(crate) struct ScanState {
    pub mask: u64,
    pub size: usize,
    pub boundary: usize,
    pub neighborhood: usize,
    pub volume: usize,
    s_deg: Vec<u32>,
}

impl ScanState {
    fn new(n: usize) -> Self {
        ScanState {
            mask: 0,
            size: 0,
            boundary: 0,
            neighborhood: 0,
            volume: 0,
            s_deg: vec![0; n],
        }
    }

    fn flip(&mut self, g: &Graph, w: usize) {
        let bit = 1u64 << w;
        let deg = g.degree(w);
        let inner = self.s_deg[w] as usize;
        if self.mask & bit == 0 {
            self.mask |= bit;
            self.size += 1;
            self.volume += deg;
            self.boundary = self.boundary + deg - 2 * inner;
            if inner > 0 {
                self.neighborhood -= 1;
            }
            for &u in g.neighbors(w) {
                self.s_deg[u] += 1;
                if self.s_deg[u] == 1 && self.mask >> u & 1 == 0 {
                    self.neighborhood += 1;
                }
            }
        } else {
            self.mask &= !bit;
            self.size -= 1;
            self.volume -= deg;
            self.boundary = self.boundary + 2 * inner - deg;
            for &u in g.neighbors(w) {
                self.s_deg[u] -= 1;
                if self.s_deg[u] == 0 && self.mask >> u & 1 == 0 {
                    self.neighborhood -= 1;
                }
            }
            if inner > 0 {
                self.neighborhood += 1;
            }
        }
    }
}

pub(crate) fn require_exhaustive(g: &Graph, what: &str, alternative: &str) -> Result<()> {
    if g.n() > EXHAUSTIVE_MAX_N {
        return Err(Error::capability(format!(
            "{what}: n = {} exceeds the exhaustive limit {EXHAUSTIVE_MAX_N}; use {alternative}",
            g.n()
        )));
    }
    Ok(())
}

/// Visit every non-empty subset of `V` once, folding into per-chunk
/// accumulators and merging them.
pub(crate) fn scan_subsets<A, I, V, M>(g: &Graph, init: I, visit: V, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &ScanState) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let n = g.n();
    assert!(n <= 63, "subset scans are limited to 63 vertices");
    let total: u64 = 1 << n;
    let chunk_bits = n.saturating_sub(12).min(8);
    let chunks: u64 = 1 << chunk_bits;
    let chunk_len = total / chunks;
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = init();
            let lo = (c * chunk_len).max(1);
            let hi = (c + 1) * chunk_len;
            let mut state = ScanState::new(n);
            let start = lo ^ (lo >> 1);
            for v in 0..n {
                if start >> v & 1 == 1 {
                    state.flip(g, v);
                }
            }
            visit(&mut acc, &state);
            for i in lo + 1..hi {
                state.flip(g, i.trailing_zeros() as usize);
                visit(&mut acc, &state);
            }
            acc
        })
        .reduce(&init, &merge)
}

/// Order on candidate sets of equal objective: smaller size first, then the
/// lexicographically smaller sorted vertex list.
pub(crate) fn set_precedes(a_size: usize, a_mask: u64, b_size: usize, b_mask: u64) -> bool {
    if a_size != b_size {
        return a_size < b_size;
    }
    let diff = a_mask ^ b_mask;
    diff != 0 && a_mask >> diff.trailing_zeros() & 1 == 1
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}
