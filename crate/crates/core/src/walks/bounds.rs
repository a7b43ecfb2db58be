//! Conductance-based upper bounds on the mixing time.
//!
//! `fr_sum = Σ_j Φ(2^-j)^-2` over the connected conductance profile, and
//! `js_value = ln n / Φ_min²` with `Φ_min` the least conductance of a set of
//! stationary mass at most 1/2. Beyond the exact-enumeration limits both are
//! computed from prefix and suffix sets of the spectral order, which only
//! overestimates each `Φ`; such results carry `exact = false`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{
    band_count, conductance_exact, conductance_profile, in_band, spectral_order, Conductance, CONNECTED_ENUM_MAX_N,
    EXHAUSTIVE_MAX_N, SWEEP_MAX_ITERATIONS,
};
use crate::graph_core::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingBounds {
    pub fr_sum: f64,
    pub js_value: f64,
    /// `Φ(2^-j)` for `j = 1..=J`.
    pub band_phi: Vec<f64>,
    pub phi_min: f64,
    pub fr_exact: bool,
    pub js_exact: bool,
}

impl MixingBounds {
    pub fn exact(&self) -> bool {
        self.fr_exact && self.js_exact
    }

    pub fn bands_below_one(&self) -> usize {
        self.band_phi.iter().filter(|&&p| p < 1.0).count()
    }
}

fn fr_sum_of(band_phi: &[f64]) -> f64 {
    band_phi.iter().map(|p| 1.0 / (p * p)).sum()
}

/// Band minima and global minimum over spectral prefix and suffix sets.
fn sweep_conductances(g: &Graph) -> Result<(Vec<f64>, f64)> {
    let n = g.n();
    let m = g.m();
    let two_m = 2 * m;
    let jmax = band_count(g);
    let order = spectral_order(g, SWEEP_MAX_ITERATIONS)?.order;
    let mut bands = vec![1.0f64; jmax as usize];
    let mut phi_min = f64::INFINITY;
    let reversed: Vec<usize> = order.iter().rev().copied().collect();
    for seq in [&order, &reversed] {
        let mut member = vec![false; n];
        let (mut boundary, mut volume) = (0usize, 0usize);
        for &v in seq.iter().take(n - 1) {
            let inner = g.neighbors(v).iter().filter(|&&w| member[w]).count();
            boundary = boundary + g.degree(v) - 2 * inner;
            volume += g.degree(v);
            member[v] = true;
            let phi = Conductance::of(boundary, volume, m).value();
            if 2 * volume <= two_m {
                phi_min = phi_min.min(phi);
            }
            for j in 1..=jmax {
                if in_band(volume, two_m, j) {
                    let slot = &mut bands[j as usize - 1];
                    *slot = slot.min(phi);
                }
            }
        }
    }
    Ok((bands, phi_min))
}

pub fn mixing_bounds(g: &Graph) -> Result<MixingBounds> {
    g.require_connected("mixing_bounds")?;
    if g.m() == 0 {
        return Err(Error::domain("mixing_bounds: graph has no edges"));
    }
    let n = g.n();
    let sweep = if n > CONNECTED_ENUM_MAX_N || n > EXHAUSTIVE_MAX_N {
        Some(sweep_conductances(g)?)
    } else {
        None
    };
    let (band_phi, fr_exact) = if n <= CONNECTED_ENUM_MAX_N {
        let prof = conductance_profile(g, true)?;
        (prof.bands.iter().map(|b| b.phi).collect(), true)
    } else {
        (sweep.as_ref().unwrap().0.clone(), false)
    };
    let (phi_min, js_exact) = if n <= EXHAUSTIVE_MAX_N {
        (conductance_exact(g)?.phi, true)
    } else {
        (sweep.as_ref().unwrap().1, false)
    };
    Ok(MixingBounds {
        fr_sum: fr_sum_of(&band_phi),
        js_value: (n as f64).ln() / (phi_min * phi_min),
        band_phi,
        phi_min,
        fr_exact,
        js_exact,
    })
}
