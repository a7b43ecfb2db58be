//! Monte Carlo estimate of the mixing time for graphs beyond the dense limit.
//!
//! Independent lazy walkers start at the two endpoints of a double sweep.
//! At each checkpoint the empirical distribution of every start group is
//! compared with `π`; the estimate is the first checkpoint where every group
//! is within 1/4. Empirical TV is biased upward by sampling noise, reported
//! as `noise_floor` (its expected value at exact stationarity).

use rand::Rng as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::operator::{stationary, tv_distance};
use crate::error::{Error, Result};
use crate::graph_core::{double_sweep, Graph};
use crate::rng::{stream, tag, Rng};

/// Checkpoints are taken at every step up to here, then geometrically.
const DENSE_CHECKPOINTS: usize = 64;
const CHECKPOINT_GROWTH: f64 = 1.03;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimateStatus {
    Mixed,
    NotMixedByHorizon,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingEstimate {
    pub status: EstimateStatus,
    /// First checkpoint with empirical TV at most 1/4.
    pub estimate: Option<usize>,
    pub starts: Vec<usize>,
    pub walkers: usize,
    pub horizon: usize,
    /// Empirical worst-start TV at the last evaluated checkpoint.
    pub last_tv: f64,
    pub noise_floor: f64,
    pub note: String,
}

fn next_checkpoint(t: usize) -> usize {
    if t < DENSE_CHECKPOINTS {
        t + 1
    } else {
        ((t as f64 * CHECKPOINT_GROWTH).ceil() as usize).max(t + 1)
    }
}

/// Expected empirical TV of `walkers` exact samples from `pi`
/// (normal approximation, `E|X - μ| ≈ σ √(2/π)` per coordinate).
fn noise_floor(pi: &[f64], walkers: usize) -> f64 {
    let c = (2.0 / std::f64::consts::PI).sqrt();
    0.5 * pi.iter().map(|&p| c * (p * (1.0 - p) / walkers as f64).sqrt()).sum::<f64>()
}

struct Walker {
    pos: usize,
    rng: Rng,
}

impl Walker {
    fn advance(&mut self, g: &Graph, steps: usize) {
        for _ in 0..steps {
            if self.rng.random_bool(0.5) {
                let nb = g.neighbors(self.pos);
                self.pos = nb[self.rng.random_range(0..nb.len())];
            }
        }
    }
}

pub fn empirical_mixing_estimate(g: &Graph, walkers: usize, horizon: usize, seed: u64) -> Result<MixingEstimate> {
    if walkers == 0 {
        return Err(Error::param("empirical_mixing_estimate: walkers must be positive"));
    }
    let st = stationary(g)?;
    let n = g.n();
    let (a, b, _) = double_sweep(g, 0);
    let mut starts = vec![a];
    if b != a {
        starts.push(b);
    }
    let mut groups: Vec<Vec<Walker>> = starts
        .iter()
        .enumerate()
        .map(|(gi, &s)| {
            (0..walkers)
                .map(|i| Walker {
                    pos: s,
                    rng: stream(seed, &[tag::WALKERS, gi as u64, i as u64]),
                })
                .collect()
        })
        .collect();

    let mut hist = vec![0.0; n];
    let mut worst_tv = |groups: &[Vec<Walker>]| {
        let mut worst = 0.0f64;
        for grp in groups {
            hist.iter_mut().for_each(|h| *h = 0.0);
            for w in grp {
                hist[w.pos] += 1.0 / walkers as f64;
            }
            worst = worst.max(tv_distance(&hist, &st.pi));
        }
        worst
    };

    let floor = noise_floor(&st.pi, walkers);
    let mut t = 0;
    let mut last_tv = worst_tv(&groups);
    let mut estimate = (last_tv <= 0.25).then_some(0);
    while estimate.is_none() && t < horizon {
        let next = next_checkpoint(t).min(horizon);
        let steps = next - t;
        groups
            .iter_mut()
            .flat_map(|grp| grp.iter_mut())
            .collect::<Vec<_>>()
            .into_par_iter()
            .for_each(|w| w.advance(g, steps));
        t = next;
        last_tv = worst_tv(&groups);
        if last_tv <= 0.25 {
            estimate = Some(t);
        }
    }

    let mut note = format!(
        "Monte Carlo estimate from {walkers} walkers per start; checkpoints every step to {DENSE_CHECKPOINTS}, then x{CHECKPOINT_GROWTH}; sampling noise floor {floor:.4}"
    );
    if floor >= 0.125 {
        note.push_str("; noise floor is large relative to 1/4, add walkers");
    }
    Ok(MixingEstimate {
        status: if estimate.is_some() {
            EstimateStatus::Mixed
        } else {
            EstimateStatus::NotMixedByHorizon
        },
        estimate,
        starts,
        walkers,
        horizon,
        last_tv,
        noise_floor: floor,
        note,
    })
}
