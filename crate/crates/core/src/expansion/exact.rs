use serde::{Deserialize, Serialize};

use super::scan::{mask_to_vec, require_exhaustive, scan_subsets, set_precedes, ScanState};
use crate::error::{Error, Result};
use crate::graph_core::Graph;

/// Minimizer of an isoperimetric ratio.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Isoperimetric {
    pub value: f64,
    pub numerator: usize,
    pub denominator: usize,
    pub argmin: Vec<usize>,
}

#[derive(Clone, Copy)]
struct Candidate {
    num: usize,
    size: usize,
    mask: u64,
}

impl Candidate {
    fn better_than(&self, other: &Candidate) -> bool {
        let lhs = self.num as u128 * other.size as u128;
        let rhs = other.num as u128 * self.size as u128;
        lhs < rhs || (lhs == rhs && set_precedes(self.size, self.mask, other.size, other.mask))
    }
}

fn keep_better(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.better_than(&x) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

fn size_limit(n: usize, max_frac: f64) -> Result<usize> {
    if !(max_frac > 0.0 && max_frac <= 1.0) {
        return Err(Error::param(format!("max_frac must lie in (0, 1], got {max_frac}")));
    }
    let limit = (max_frac * n as f64 + 1e-9).floor() as usize;
    if limit == 0 {
        return Err(Error::param(format!("max_frac = {max_frac} admits no non-empty set for n = {n}")));
    }
    Ok(limit)
}

fn isoperimetric(g: &Graph, max_frac: f64, what: &str, numerator: fn(&ScanState) -> usize) -> Result<Isoperimetric> {
    g.require_connected(what)?;
    require_exhaustive(g, what, "sweep_cut_upper_bound")?;
    let limit = size_limit(g.n(), max_frac)?;
    let best = scan_subsets(
        g,
        || None,
        |acc: &mut Option<Candidate>, st| {
            if st.size <= limit {
                let c = Candidate {
                    num: numerator(st),
                    size: st.size,
                    mask: st.mask,
                };
                if acc.as_ref().map_or(true, |b| c.better_than(b)) {
                    *acc = Some(c);
                }
            }
        },
        keep_better,
    )
    .expect("at least one admissible set");
    Ok(Isoperimetric {
        value: best.num as f64 / best.size as f64,
        numerator: best.num,
        denominator: best.size,
        argmin: mask_to_vec(best.mask),
    })
}

/// Exact `min |∂S| / |S|` over `0 < |S| <= max_frac * n` (the Cheeger constant
/// when `max_frac = 1/2`). Ties go to the smallest, then lexicographically
/// least, set.
pub fn edge_isoperimetric_exact(g: &Graph, max_frac: f64) -> Result<Isoperimetric> {
    isoperimetric(g, max_frac, "edge_isoperimetric_exact", |st| st.boundary)
}

/// Exact `min |N(S)| / |S|` over `0 < |S| <= max_frac * n`.
pub fn vertex_isoperimetric_exact(g: &Graph, max_frac: f64) -> Result<Isoperimetric> {
    isoperimetric(g, max_frac, "vertex_isoperimetric_exact", |st| st.neighborhood)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfilePoint {
    pub s: usize,
    pub min_boundary: usize,
    /// `min_boundary * ln(e n / s) / s`.
    pub value: f64,
    pub witness: Vec<usize>,
}

/// For every `1 <= s <= alpha * n`, the least boundary of an `s`-set,
/// normalized as `|∂S| ln(e n / s) / s`.
pub fn expansion_profile(g: &Graph, alpha: f64) -> Result<Vec<ProfilePoint>> {
    g.require_connected("expansion_profile")?;
    require_exhaustive(g, "expansion_profile", "sweep_cut_upper_bound")?;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::param(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    let limit = size_limit(g.n(), alpha)?;
    let merge = |a: Vec<Option<(usize, u64)>>, b: Vec<Option<(usize, u64)>>| {
        a.into_iter()
            .zip(b)
            .enumerate()
            .map(|(s, (x, y))| match (x, y) {
                (Some(p), Some(q)) => {
                    if q.0 < p.0 || (q.0 == p.0 && set_precedes(s, q.1, s, p.1)) {
                        Some(q)
                    } else {
                        Some(p)
                    }
                }
                (p, None) => p,
                (None, q) => q,
            })
            .collect()
    };
    let best = scan_subsets(
        g,
        || vec![None; limit + 1],
        |acc: &mut Vec<Option<(usize, u64)>>, st| {
            if st.size <= limit {
                let slot = &mut acc[st.size];
                let better = match slot {
                    None => true,
                    Some((b, m)) => st.boundary < *b || (st.boundary == *b && set_precedes(st.size, st.mask, st.size, *m)),
                };
                if better {
                    *slot = Some((st.boundary, st.mask));
                }
            }
        },
        merge,
    );
    let n = g.n() as f64;
    Ok(best
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(s, entry)| {
            let (b, mask) = entry.expect("every size up to n has a set");
            ProfilePoint {
                s,
                min_boundary: b,
                value: b as f64 * (std::f64::consts::E * n / s as f64).ln() / s as f64,
                witness: mask_to_vec(mask),
            }
        })
        .collect())
}
