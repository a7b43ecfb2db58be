use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph_core::Graph;

/// Largest vertex count for dense transition matrices and exact mixing times.
pub const DENSE_MAX_N: usize = 4096;

/// Dense row-stochastic matrix of the lazy walk:
/// `P(u,u) = 1/2`, `P(u,v) = 1/(2 deg u)` for each neighbour `v`.
#[derive(Debug, Clone)]
pub struct TransitionOperator {
    n: usize,
    data: Vec<f64>,
}

impl TransitionOperator {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > DENSE_MAX_N {
            return Err(Error::capability(format!(
                "transition matrix: n = {n} exceeds the dense limit {DENSE_MAX_N}"
            )));
        }
        if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
            return Err(Error::domain(format!("vertex {v} is isolated; the walk is undefined there")));
        }
        let mut data = vec![0.0; n * n];
        for u in 0..n {
            data[u * n + u] = 0.5;
            let w = 1.0 / (2 * g.degree(u)) as f64;
            for &v in g.neighbors(u) {
                data[u * n + v] = w;
            }
        }
        Ok(TransitionOperator { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[f64] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// Row vector times matrix: `x P`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for (u, &xu) in x.iter().enumerate() {
            if xu != 0.0 {
                for (o, p) in out.iter_mut().zip(self.row(u)) {
                    *o += xu * p;
                }
            }
        }
        out
    }

    /// Largest `|Σ_v P(u,v) - 1|` over rows.
    pub fn max_row_defect(&self) -> f64 {
        (0..self.n)
            .map(|u| (self.row(u).iter().sum::<f64>() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Largest detailed-balance violation `|π(u)P(u,v) - π(v)P(v,u)|`.
    pub fn max_reversibility_defect(&self, pi: &[f64]) -> f64 {
        let mut worst = 0.0f64;
        for u in 0..self.n {
            for v in u + 1..self.n {
                worst = worst.max((pi[u] * self.get(u, v) - pi[v] * self.get(v, u)).abs());
            }
        }
        worst
    }
}

/// One lazy step `x ↦ x P` in `O(n + m)` without materializing `P`.
pub fn lazy_step(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (v, o) in out.iter_mut().enumerate() {
        let mut acc = 0.5 * x[v];
        for &u in g.neighbors(v) {
            acc += x[u] / (2 * g.degree(u)) as f64;
        }
        *o = acc;
    }
}

/// Stationary distribution `π(u) = deg(u) / 2m`, with its exact form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stationary {
    pub pi: Vec<f64>,
    /// `deg(u)`, the numerator of `π(u)`.
    pub numerators: Vec<u64>,
    /// `2m`, the common denominator.
    pub denominator: u64,
    /// `‖πP - π‖₁` evaluated with the sparse step.
    pub residual: f64,
}

impl Stationary {
    pub fn exact(&self, u: usize) -> Ratio<u64> {
        Ratio::new(self.numerators[u], self.denominator)
    }

    pub fn pi_min(&self) -> f64 {
        self.pi.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

pub fn stationary(g: &Graph) -> Result<Stationary> {
    g.require_connected("stationary")?;
    if g.m() == 0 {
        return Err(Error::domain("stationary: graph has no edges"));
    }
    let two_m = 2 * g.m() as u64;
    let numerators: Vec<u64> = (0..g.n()).map(|u| g.degree(u) as u64).collect();
    let pi: Vec<f64> = numerators.iter().map(|&d| d as f64 / two_m as f64).collect();
    let mut next = vec![0.0; g.n()];
    lazy_step(g, &pi, &mut next);
    let residual = pi.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
    Ok(Stationary {
        pi,
        numerators,
        denominator: two_m,
        residual,
    })
}

/// Total variation distance, computed as half the L1 distance.
pub fn tv_distance(p: &[f64], q: &[f64]) -> f64 {
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

/// `Q(S) = Σ_{u ∈ S, v ∉ S} π(u) P(u, v)` from the transition operator.
pub fn stationary_flow(g: &Graph, set: &[usize]) -> Result<f64> {
    let member = g.membership(set)?;
    let st = stationary(g)?;
    let mut q = 0.0;
    for &u in set {
        let p = 1.0 / (2 * g.degree(u)) as f64;
        for &v in g.neighbors(u) {
            if !member[v] {
                q += st.pi[u] * p;
            }
        }
    }
    Ok(q)
}
