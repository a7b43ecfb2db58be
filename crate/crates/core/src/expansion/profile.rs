//! Conductance profile `Φ(p)`: the least conductance of a set whose
//! stationary mass lies in `[p/2, p]`, for `p = 2^-j`, `j = 1..⌈log2 1/π_min⌉`.
//! An empty band has `Φ = 1`.
//!
//! Band membership is decided in integers: with `vol(S)` the degree sum and
//! `2m` the total volume, `S` is in band `j` iff
//! `vol(S) * 2^(j+1) >= 2m` and `vol(S) * 2^j <= 2m` (both edges inclusive).

use serde::{Deserialize, Serialize};

use super::scan::{mask_to_vec, require_exhaustive, scan_subsets, set_precedes};
use crate::error::{Error, Result};
use crate::graph_core::Graph;
use crate::subset_enum::{walk_connected_sets, WalkLimits};

/// Largest vertex count for connected-set enumeration.
pub const CONNECTED_ENUM_MAX_N: usize = 18;

/// `Φ(S) = |∂S| m / (vol(S) (2m - vol(S)))` kept as an exact fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conductance {
    pub num: u128,
    pub den: u128,
}

impl Conductance {
    pub fn of(boundary: usize, volume: usize, m: usize) -> Self {
        Conductance {
            num: boundary as u128 * m as u128,
            den: volume as u128 * (2 * m - volume) as u128,
        }
    }

    pub fn one() -> Self {
        Conductance { num: 1, den: 1 }
    }

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn cmp_value(&self, other: &Conductance) -> std::cmp::Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Band {
    pub j: u32,
    pub p: f64,
    pub phi: f64,
    pub phi_exact: Conductance,
    /// `None` when the band is empty (and `phi` is 1 by convention).
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConductanceProfile {
    pub restrict_connected: bool,
    pub pi_min: f64,
    pub bands: Vec<Band>,
}

/// Number of bands, `⌈log2(2m / d_min)⌉`.
pub fn band_count(g: &Graph) -> u32 {
    let two_m = 2 * g.m() as u128;
    let dmin = g.min_degree().max(1) as u128;
    let mut j = 0;
    while dmin << j < two_m {
        j += 1;
    }
    j
}

pub(crate) fn in_band(volume: usize, two_m: usize, j: u32) -> bool {
    let v = volume as u128;
    let t = two_m as u128;
    (v << (j + 1)) >= t && (v << j) <= t
}

#[derive(Clone, Copy)]
struct BandBest {
    phi: Conductance,
    size: usize,
    mask: u64,
}

impl BandBest {
    fn better_than(&self, other: &BandBest) -> bool {
        match self.phi.cmp_value(&other.phi) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => set_precedes(self.size, self.mask, other.size, other.mask),
        }
    }
}

fn offer(slot: &mut Option<BandBest>, cand: BandBest) {
    if slot.as_ref().map_or(true, |b| cand.better_than(b)) {
        *slot = Some(cand);
    }
}

/// Exact conductance profile. With `restrict_connected` only sets inducing a
/// connected subgraph are candidates (enumerated through the connected-set
/// walker); otherwise every subset is scanned.
pub fn conductance_profile(g: &Graph, restrict_connected: bool) -> Result<ConductanceProfile> {
    g.require_connected("conductance_profile")?;
    if g.m() == 0 {
        return Err(Error::domain("conductance_profile: graph has no edges"));
    }
    let n = g.n();
    if restrict_connected && n > CONNECTED_ENUM_MAX_N {
        return Err(Error::capability(format!(
            "conductance_profile: n = {n} exceeds the connected-set limit {CONNECTED_ENUM_MAX_N}; use mixing_bounds in approximate mode"
        )));
    }
    if !restrict_connected {
        require_exhaustive(g, "conductance_profile", "mixing_bounds in approximate mode")?;
    }
    let jmax = band_count(g);
    let two_m = 2 * g.m();
    let bands_of = |volume: usize| (1..=jmax).filter(move |&j| in_band(volume, two_m, j));

    let best: Vec<Option<BandBest>> = if restrict_connected {
        let mut best = vec![None; jmax as usize + 1];
        let mut member = vec![false; n];
        for root in 0..n {
            walk_connected_sets(g, root, WalkLimits::unbounded(root), |s, _| {
                if s.len() == n {
                    return;
                }
                let mut mask = 0u64;
                for &u in s {
                    member[u] = true;
                    mask |= 1 << u;
                }
                let mut volume = 0;
                let mut boundary = 0;
                for &u in s {
                    volume += g.degree(u);
                    boundary += g.neighbors(u).iter().filter(|&&w| !member[w]).count();
                }
                for &u in s {
                    member[u] = false;
                }
                let cand = BandBest {
                    phi: Conductance::of(boundary, volume, g.m()),
                    size: s.len(),
                    mask,
                };
                for j in bands_of(volume) {
                    offer(&mut best[j as usize], cand);
                }
            });
        }
        best
    } else {
        scan_subsets(
            g,
            || vec![None; jmax as usize + 1],
            |acc: &mut Vec<Option<BandBest>>, st| {
                if st.size == n {
                    return;
                }
                let cand = BandBest {
                    phi: Conductance::of(st.boundary, st.volume, g.m()),
                    size: st.size,
                    mask: st.mask,
                };
                for j in bands_of(st.volume) {
                    offer(&mut acc[j as usize], cand);
                }
            },
            |mut a, b| {
                for (slot, other) in a.iter_mut().zip(b) {
                    if let Some(o) = other {
                        offer(slot, o);
                    }
                }
                a
            },
        )
    };

    let bands = (1..=jmax)
        .map(|j| {
            let p = 0.5f64.powi(j as i32);
            match best[j as usize] {
                Some(b) => Band {
                    j,
                    p,
                    phi: b.phi.value(),
                    phi_exact: b.phi,
                    witness: Some(mask_to_vec(b.mask)),
                },
                None => Band {
                    j,
                    p,
                    phi: 1.0,
                    phi_exact: Conductance::one(),
                    witness: None,
                },
            }
        })
        .collect();
    Ok(ConductanceProfile {
        restrict_connected,
        pi_min: g.min_degree() as f64 / two_m as f64,
        bands,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlobalConductance {
    pub phi: f64,
    pub phi_exact: Conductance,
    pub witness: Vec<usize>,
}

/// Exact `min Φ(S)` over all non-empty `S` with `π(S) <= 1/2`.
pub fn conductance_exact(g: &Graph) -> Result<GlobalConductance> {
    g.require_connected("conductance_exact")?;
    if g.m() == 0 {
        return Err(Error::domain("conductance_exact: graph has no edges"));
    }
    require_exhaustive(g, "conductance_exact", "mixing_bounds in approximate mode")?;
    let two_m = 2 * g.m();
    let best = scan_subsets(
        g,
        || None,
        |acc: &mut Option<BandBest>, st| {
            if 2 * st.volume <= two_m {
                offer(
                    acc,
                    BandBest {
                        phi: Conductance::of(st.boundary, st.volume, g.m()),
                        size: st.size,
                        mask: st.mask,
                    },
                );
            }
        },
        |a, b| {
            let mut a = a;
            if let Some(x) = b {
                offer(&mut a, x);
            }
            a
        },
    )
    .ok_or_else(|| Error::domain("no set with stationary mass at most 1/2"))?;
    Ok(GlobalConductance {
        phi: best.phi.value(),
        phi_exact: best.phi,
        witness: mask_to_vec(best.mask),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::cut_stats;
    use crate::graph_core::{generate_base, BaseKind};

    #[test]
    fn k2_single_band_of_singletons() {
        let g = generate_base(BaseKind::Path, 2, None).unwrap();
        for restrict in [true, false] {
            let prof = conductance_profile(&g, restrict).unwrap();
            assert_eq!(prof.bands.len(), 1);
            assert_eq!(prof.bands[0].phi, 1.0);
            assert_eq!(prof.bands[0].witness, Some(vec![0]));
        }
    }

    #[test]
    fn bands_below_pi_min_are_one() {
        // Star K_{1,4}: pi_min = 1/8, so three bands; band j=3 ([1/16, 1/8]) holds the leaves.
        let g = generate_base(BaseKind::Star, 5, None).unwrap();
        assert_eq!(band_count(&g), 3);
        // Path 0-1-2: pi = (1/4, 1/2, 1/4); two bands, j=2 is [1/8,1/4].
        let p3 = generate_base(BaseKind::Path, 3, None).unwrap();
        let prof = conductance_profile(&p3, true).unwrap();
        assert_eq!(prof.bands.len(), 2);
        assert!(prof.bands.iter().all(|b| b.witness.is_some()));
        // A 3-regular graph on 4 vertices: pi_min = 1/4, bands j=1,2.
        let k4 = generate_base(BaseKind::Complete, 4, None).unwrap();
        let prof = conductance_profile(&k4, false).unwrap();
        assert_eq!(prof.bands.len(), 2);
    }

    #[test]
    fn empty_band_defaults_to_one() {
        // K_{1,6}: 2m = 12, four bands. Band j=2 needs volume in [1.5, 3], i.e.
        // two or three leaves, which never induce a connected set.
        let g = generate_base(BaseKind::Star, 7, None).unwrap();
        let prof = conductance_profile(&g, true).unwrap();
        let unrestricted = conductance_profile(&g, false).unwrap();
        for (r, u) in prof.bands.iter().zip(&unrestricted.bands) {
            assert!(r.phi >= u.phi);
        }
        assert_eq!(prof.bands.len(), 4);
        assert!(prof.bands[1].witness.is_none());
        assert!(unrestricted.bands[1].witness.is_some());
        assert!(prof.bands.iter().filter(|b| b.witness.is_none()).all(|b| b.phi == 1.0));
    }

    #[test]
    fn restricted_dominates_unrestricted_on_path8() {
        let g = generate_base(BaseKind::Path, 8, None).unwrap();
        let r = conductance_profile(&g, true).unwrap();
        let u = conductance_profile(&g, false).unwrap();
        for (a, b) in r.bands.iter().zip(&u.bands) {
            assert!(a.phi >= b.phi, "band {}", a.j);
        }
    }

    #[test]
    fn witnesses_agree_with_cut_stats() {
        let g = generate_base(BaseKind::Grid, 12, None).unwrap();
        let prof = conductance_profile(&g, true).unwrap();
        for b in &prof.bands {
            if let Some(w) = &b.witness {
                let c = cut_stats(&g, w).unwrap();
                assert!((c.phi_s - b.phi).abs() < 1e-12);
                assert!(g.is_connected_within(&g.membership(w).unwrap()));
            }
        }
        let glob = conductance_exact(&g).unwrap();
        let c = cut_stats(&g, &glob.witness).unwrap();
        assert!((c.phi_s - glob.phi).abs() < 1e-12);
        assert!(c.pi_s <= 0.5);
    }

    #[test]
    fn threshold_errors() {
        let g = generate_base(BaseKind::Path, 19, None).unwrap();
        assert!(matches!(conductance_profile(&g, true), Err(Error::Capability(_))));
        assert!(conductance_profile(&g, false).is_ok());
    }
}
