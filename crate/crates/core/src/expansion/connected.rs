use super::exact::Isoperimetric;
use super::profile::CONNECTED_ENUM_MAX_N;
use crate::error::{Error, Result};
use crate::graph_core::Graph;
use crate::subset_enum::{walk_connected_sets, WalkLimits};

/// Exact `min |∂S| / |S|` over connected `S` with `|S| <= n / 2`, found by
/// walking every connected set from its least vertex. Ties go to the
/// smallest, then lexicographically least, set.
pub fn connected_edge_expansion_exact(g: &Graph) -> Result<Isoperimetric> {
    let n = g.n();
    g.require_connected("connected_edge_expansion_exact")?;
    if n > CONNECTED_ENUM_MAX_N {
        return Err(Error::capability(format!(
            "connected_edge_expansion_exact: n = {n} exceeds the connected-set limit {CONNECTED_ENUM_MAX_N}"
        )));
    }
    if n < 2 {
        return Err(Error::domain("connected_edge_expansion_exact needs at least two vertices"));
    }
    let mut member = vec![false; n];
    let mut best: Option<(usize, Vec<usize>)> = None;
    for root in 0..n {
        let limits = WalkLimits {
            max_size: n / 2,
            max_boundary: usize::MAX,
            min_label: root,
        };
        walk_connected_sets(g, root, limits, |s, _| {
            s.iter().for_each(|&v| member[v] = true);
            let boundary: usize = s
                .iter()
                .map(|&v| g.neighbors(v).iter().filter(|&&w| !member[w]).count())
                .sum();
            s.iter().for_each(|&v| member[v] = false);
            let better = match &best {
                None => true,
                Some((bb, bs)) => {
                    let (lhs, rhs) = (boundary * bs.len(), bb * s.len());
                    lhs < rhs
                        || (lhs == rhs
                            && (s.len() < bs.len() || (s.len() == bs.len() && {
                                let mut cand = s.to_vec();
                                cand.sort_unstable();
                                cand < *bs
                            })))
                }
            };
            if better {
                let mut set = s.to_vec();
                set.sort_unstable();
                best = Some((boundary, set));
            }
        });
    }
    let (num, argmin) = best.expect("n >= 2 admits a singleton");
    Ok(Isoperimetric {
        value: num as f64 / argmin.len() as f64,
        numerator: num,
        denominator: argmin.len(),
        argmin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::edge_isoperimetric_exact;
    use crate::graph_core::corpus::small_corpus;
    use crate::graph_core::{generate_base, BaseKind};

    #[test]
    fn path_and_cycle() {
        let p = generate_base(BaseKind::Path, 6, None).unwrap();
        let r = connected_edge_expansion_exact(&p).unwrap();
        assert_eq!((r.numerator, r.denominator, r.argmin), (1, 3, vec![0, 1, 2]));
        let c = generate_base(BaseKind::Cycle, 6, None).unwrap();
        assert_eq!(connected_edge_expansion_exact(&c).unwrap().value, 2.0 / 3.0);
    }

    #[test]
    fn never_below_unrestricted_minimum() {
        for (name, g) in small_corpus().into_iter().filter(|(_, g)| g.n() >= 2) {
            let conn = connected_edge_expansion_exact(&g).unwrap();
            let all = edge_isoperimetric_exact(&g, 0.5).unwrap();
            assert!(conn.value >= all.value - 1e-12, "{name}");
        }
    }
}
