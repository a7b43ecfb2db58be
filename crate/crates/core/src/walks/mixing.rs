//! Exact mixing time of the lazy walk by iterating point masses.
//!
//! The worst case over all initial distributions is attained at a point
//! mass: `x0 ↦ d_TV(x0 P^t, π)` is convex in `x0`, so its maximum over the
//! simplex sits at a vertex. Each start is advanced independently until its
//! distance drops to `1/4`; the mixing time is the largest such step.
//!
//! Comparisons against `1/4` use a guard band: the first `t` with
//! `d_TV <= 1/4 - MIXING_GUARD` is reported. The result is a boundary case
//! when a start attaining `t_mix` was within `MIXING_GUARD` of `1/4` one step
//! earlier, so exact arithmetic could give `t_mix - 1`. Distance from a fixed
//! start never increases, so other starts cannot affect the answer.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::operator::{lazy_step, stationary, tv_distance, DENSE_MAX_N};
use crate::error::{Error, Result};
use crate::graph_core::Graph;

pub const MIXING_THRESHOLD: f64 = 0.25;
pub const MIXING_GUARD: f64 = 1e-9;
/// Steps after which a single start is abandoned.
pub const MIXING_STEP_CAP: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingTime {
    pub t_mix: usize,
    /// A start attaining `t_mix` (the smallest such label).
    pub worst_start: usize,
    /// `t_mix - 1` would qualify under exact arithmetic for some worst start.
    pub boundary: bool,
}

fn require_dense(g: &Graph, what: &str) -> Result<()> {
    if g.n() > DENSE_MAX_N {
        return Err(Error::capability(format!(
            "{what}: n = {} exceeds the dense limit {DENSE_MAX_N}; use mixing_bounds or empirical_mixing_estimate",
            g.n()
        )));
    }
    Ok(())
}

/// First qualifying step from `start` and the distance one step before it.
fn first_mixing_step(g: &Graph, pi: &[f64], start: usize) -> Result<(usize, f64)> {
    let n = g.n();
    let mut x = vec![0.0; n];
    let mut next = vec![0.0; n];
    x[start] = 1.0;
    let mut prev = f64::INFINITY;
    for t in 0..=MIXING_STEP_CAP {
        let tv = tv_distance(&x, pi);
        if tv <= MIXING_THRESHOLD - MIXING_GUARD {
            return Ok((t, prev));
        }
        prev = tv;
        lazy_step(g, &x, &mut next);
        std::mem::swap(&mut x, &mut next);
    }
    Err(Error::capability(format!(
        "mixing from vertex {start} did not finish within {MIXING_STEP_CAP} steps"
    )))
}

pub fn mixing_time_exact(g: &Graph) -> Result<MixingTime> {
    require_dense(g, "mixing_time_exact")?;
    let st = stationary(g)?;
    let per_start: Vec<(usize, f64)> = (0..g.n())
        .into_par_iter()
        .map(|s| first_mixing_step(g, &st.pi, s))
        .collect::<Result<_>>()?;
    let t_mix = per_start.iter().map(|p| p.0).max().expect("non-empty graph");
    let worst_start = per_start.iter().position(|p| p.0 == t_mix).unwrap();
    let boundary = per_start
        .iter()
        .any(|&(t, prev)| t == t_mix && (prev - MIXING_THRESHOLD).abs() <= MIXING_GUARD);
    Ok(MixingTime {
        t_mix,
        worst_start,
        boundary,
    })
}

/// `max_s d_TV(e_s P^t, π)` for `t = 0..=steps`.
pub fn worst_tv_trajectory(g: &Graph, steps: usize) -> Result<Vec<f64>> {
    require_dense(g, "worst_tv_trajectory")?;
    let st = stationary(g)?;
    let n = g.n();
    let per_start: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let mut x = vec![0.0; n];
            let mut next = vec![0.0; n];
            x[s] = 1.0;
            let mut out = Vec::with_capacity(steps + 1);
            for _ in 0..=steps {
                out.push(tv_distance(&x, &st.pi));
                lazy_step(g, &x, &mut next);
                std::mem::swap(&mut x, &mut next);
            }
            out
        })
        .collect();
    Ok((0..=steps)
        .map(|t| per_start.iter().map(|traj| traj[t]).fold(0.0, f64::max))
        .collect())
}
