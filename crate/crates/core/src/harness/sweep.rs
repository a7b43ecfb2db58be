use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{BlobSize, ExperimentConfig, Metric};
use crate::decomposition::blob_partition;
use crate::error::{Error, ErrorKind, Result};
use crate::expansion::{
    connected_edge_expansion_exact, edge_isoperimetric_exact, expansion_profile, vertex_isoperimetric_exact,
};
use crate::graph_core::{diameter, generate_base, perturb, PerturbedGraph};
use crate::longpath::{default_blob_size, long_path_blob_heuristic};
use crate::rng::{derive_seed, tag};
use crate::subset_enum::verify_counting_bound;
use crate::walks::{mixing_bounds, mixing_time_exact};

/// Largest n for the exhaustive counting-bound check.
pub const PROP17_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Ok,
    /// Computed with an approximate method beyond the exact limits.
    Approx,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    Capability,
    Precondition,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub n: usize,
    pub seed_index: usize,
    pub metric: Metric,
    pub status: RowStatus,
    pub value: Option<f64>,
    pub reason: Option<SkipReason>,
    pub base_max_degree: usize,
    pub merged_edges: usize,
    pub note: String,
}

impl Row {
    pub fn evaluated(&self) -> Option<f64> {
        match self.status {
            RowStatus::Skipped => None,
            _ => self.value,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub n: usize,
    pub seed_index: usize,
    pub metric: Metric,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub metric: Metric,
    pub n: usize,
    pub median: f64,
    pub count: usize,
    pub approx: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthRatio {
    pub metric: Metric,
    pub n_from: usize,
    pub n_to: usize,
    pub ratio: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthModel {
    LogN,
    LogSquaredN,
    N,
    InverseLogN,
}

impl GrowthModel {
    pub const ALL: [GrowthModel; 4] = [GrowthModel::LogN, GrowthModel::LogSquaredN, GrowthModel::N, GrowthModel::InverseLogN];

    pub fn eval(self, n: usize) -> f64 {
        let l = (n as f64).ln();
        match self {
            GrowthModel::LogN => l,
            GrowthModel::LogSquaredN => l * l,
            GrowthModel::N => n as f64,
            GrowthModel::InverseLogN => 1.0 / l,
        }
    }
}

/// Least-squares fit `median ≈ intercept + slope * model(n)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fit {
    pub metric: Metric,
    pub model: GrowthModel,
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    pub rows: Vec<Row>,
    pub aggregates: Vec<Aggregate>,
    pub ratios: Vec<GrowthRatio>,
    pub fits: Vec<Fit>,
    #[serde(skip)]
    pub timings: Vec<Timing>,
}

impl ExperimentResult {
    pub fn median(&self, metric: Metric, n: usize) -> Option<f64> {
        self.aggregates.iter().find(|a| a.metric == metric && a.n == n).map(|a| a.median)
    }

    pub fn has_metric(&self, metric: Metric) -> bool {
        self.config.metrics.contains(&metric)
    }
}

/// Seed of run `(n, seed_index)`: `derive_seed(root, [n, seed_index])`.
/// Metric-specific randomness uses `derive_seed(cell, [METRIC, metric id])`
/// and a random base graph uses `derive_seed(cell, [BASE])`.
pub fn cell_seed(root: u64, n: usize, seed_index: usize) -> u64 {
    derive_seed(root, &[n as u64, seed_index as u64])
}

pub fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(f64::total_cmp);
    let h = values.len() / 2;
    Some(if values.len() % 2 == 1 {
        values[h]
    } else {
        (values[h - 1] + values[h]) / 2.0
    })
}

fn blob_size(cfg: &ExperimentConfig, n: usize) -> Result<usize> {
    match cfg.k {
        BlobSize::Fixed(k) => Ok(k),
        BlobSize::Auto => default_blob_size(cfg.eps_for(n), n),
    }
}

/// Value, whether it is approximate, and a note.
fn evaluate(cfg: &ExperimentConfig, pg: &PerturbedGraph, metric: Metric, cell: u64) -> Result<(f64, bool, String)> {
    let g = &pg.merged;
    let n = g.n();
    Ok(match metric {
        Metric::Diameter => (diameter(g)? as f64, false, String::new()),
        Metric::TMix => {
            let t = mixing_time_exact(g)?;
            let note = if t.boundary { "boundary case within guard band" } else { "" };
            (t.t_mix as f64, false, note.into())
        }
        Metric::FrSum => {
            let b = mixing_bounds(g)?;
            (b.fr_sum, !b.fr_exact, format!("js_value={}", b.js_value))
        }
        Metric::IotaExact => (vertex_isoperimetric_exact(g, 0.5)?.value, false, String::new()),
        Metric::CExact => (edge_isoperimetric_exact(g, 0.5)?.value, false, String::new()),
        Metric::Profile => {
            let p = expansion_profile(g, cfg.alpha)?;
            let min = p.iter().map(|q| q.value).fold(f64::INFINITY, f64::min);
            (min, false, String::new())
        }
        Metric::ConnExpansion => (connected_edge_expansion_exact(g)?.value, false, String::new()),
        Metric::Longpath => {
            let k = blob_size(cfg, n)?;
            let h = long_path_blob_heuristic(pg, k, derive_seed(cell, &[tag::METRIC, metric.id()]))?;
            (h.path.length as f64, false, format!("method={} k={k} t={}", h.path.method.name(), h.t))
        }
        Metric::BlobCheck => {
            let k = blob_size(cfg, n)?;
            let part = blob_partition(&pg.base, k)?;
            match part.validate(&pg.base) {
                Ok(()) => (1.0, false, format!("k={k} t={}", part.t())),
                Err(e) => (0.0, false, e.to_string()),
            }
        }
        Metric::Prop17Check => {
            if n > PROP17_MAX_N {
                return Err(Error::Capability(format!("prop17_check: n = {n} exceeds {PROP17_MAX_N}")));
            }
            let c = verify_counting_bound(g);
            (c.violations.len() as f64, false, format!("triples={} sets={}", c.triples, c.sets))
        }
    })
}

fn run_cell(cfg: &ExperimentConfig, n: usize, seed_index: usize) -> Result<Vec<(Row, Timing)>> {
    let cell = cell_seed(cfg.root_seed, n, seed_index);
    let base_seed = cfg.base.needs_seed().then(|| derive_seed(cell, &[tag::BASE]));
    let base = generate_base(cfg.base, n, base_seed).map_err(|e| Error::Config(format!("base graph at n = {n}: {e}")))?;
    let pg = perturb(&base, &cfg.params(cell))?;
    let mut out = Vec::with_capacity(cfg.metrics.len());
    for &metric in &cfg.metrics {
        let start = Instant::now();
        let (status, value, reason, note) = match evaluate(cfg, &pg, metric, cell) {
            Ok((v, approx, note)) => (if approx { RowStatus::Approx } else { RowStatus::Ok }, Some(v), None, note),
            Err(e) => match e.kind() {
                ErrorKind::Capability => (RowStatus::Skipped, None, Some(SkipReason::Capability), e.to_string()),
                ErrorKind::Domain | ErrorKind::Parameter => {
                    (RowStatus::Skipped, None, Some(SkipReason::Precondition), e.to_string())
                }
                _ => return Err(e),
            },
        };
        let row = Row {
            n,
            seed_index,
            metric,
            status,
            value,
            reason,
            base_max_degree: base.max_degree(),
            merged_edges: pg.merged.m(),
            note,
        };
        let timing = Timing {
            n,
            seed_index,
            metric,
            seconds: start.elapsed().as_secs_f64(),
        };
        out.push((row, timing));
    }
    Ok(out)
}

fn fit(metric: Metric, model: GrowthModel, pts: &[(usize, f64)]) -> Option<Fit> {
    if pts.len() < 2 {
        return None;
    }
    let xs: Vec<f64> = pts.iter().map(|&(n, _)| model.eval(n)).collect();
    let ys: Vec<f64> = pts.iter().map(|&(_, y)| y).collect();
    let k = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / k, ys.iter().sum::<f64>() / k);
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Some(Fit {
        metric,
        model,
        slope,
        intercept: my - slope * mx,
        r2,
    })
}

pub fn summarize(config: ExperimentConfig, rows: Vec<Row>, timings: Vec<Timing>) -> ExperimentResult {
    let mut aggregates = Vec::new();
    let mut ratios = Vec::new();
    let mut fits = Vec::new();
    for &metric in &config.metrics {
        let mut series = Vec::new();
        for &n in &config.n_list {
            let cell: Vec<&Row> = rows.iter().filter(|r| r.metric == metric && r.n == n).collect();
            let mut vals: Vec<f64> = cell.iter().filter_map(|r| r.evaluated()).collect();
            if let Some(med) = median(&mut vals) {
                aggregates.push(Aggregate {
                    metric,
                    n,
                    median: med,
                    count: vals.len(),
                    approx: cell.iter().filter(|r| r.status == RowStatus::Approx).count(),
                });
                series.push((n, med));
            }
        }
        for w in series.windows(2) {
            ratios.push(GrowthRatio {
                metric,
                n_from: w[0].0,
                n_to: w[1].0,
                ratio: w[1].1 / w[0].1,
            });
        }
        fits.extend(GrowthModel::ALL.iter().filter_map(|&m| fit(metric, m, &series)));
    }
    ExperimentResult {
        config,
        rows,
        aggregates,
        ratios,
        fits,
        timings,
    }
}

/// Run every `(n, seed_index)` cell of the config. Cells run in parallel;
/// rows are sorted by `(n, seed_index, metric position in the config)`.
pub fn run_sweep(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    cfg.validate()?;
    let cells: Vec<(usize, usize)> = cfg
        .n_list
        .iter()
        .flat_map(|&n| (0..cfg.seeds).map(move |s| (n, s)))
        .collect();
    let results: Vec<Vec<(Row, Timing)>> = cells
        .par_iter()
        .map(|&(n, s)| run_cell(cfg, n, s))
        .collect::<Result<_>>()?;
    let order = |m: Metric| cfg.metrics.iter().position(|&x| x == m).unwrap();
    let mut pairs: Vec<(Row, Timing)> = results.into_iter().flatten().collect();
    pairs.sort_by_key(|(r, _)| (r.n, r.seed_index, order(r.metric)));
    let (rows, timings) = pairs.into_iter().unzip();
    Ok(summarize(cfg.clone(), rows, timings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::BaseKind;
    use crate::harness::config::{BlobSize, EpsSpec};

    fn cfg(base: BaseKind, n_list: Vec<usize>, eps: f64, seeds: usize, metrics: Vec<Metric>) -> ExperimentConfig {
        ExperimentConfig {
            name: "test".into(),
            base,
            n_list,
            eps: EpsSpec::Fixed(eps),
            seeds,
            root_seed: 9,
            metrics,
            alpha: 0.5,
            k: BlobSize::Auto,
        }
    }

    #[test]
    fn row_count() {
        let c = cfg(BaseKind::Path, vec![256, 512], 0.5, 5, vec![Metric::Diameter]);
        let r = run_sweep(&c).unwrap();
        assert_eq!(r.rows.len(), 10);
        assert!(r.rows.iter().all(|row| row.status == RowStatus::Ok));
        assert_eq!(r.aggregates.len(), 2);
        assert_eq!(r.ratios.len(), 1);
    }

    #[test]
    fn unperturbed_path_diameter() {
        let c = cfg(BaseKind::Path, vec![10, 20], 0.0, 2, vec![Metric::Diameter]);
        let r = run_sweep(&c).unwrap();
        for row in &r.rows {
            assert_eq!(row.value, Some((row.n - 1) as f64));
        }
    }

    #[test]
    fn skipped_cells_are_marked() {
        let c = cfg(BaseKind::Cycle, vec![12, 30], 0.5, 2, vec![Metric::IotaExact, Metric::Prop17Check, Metric::FrSum]);
        let r = run_sweep(&c).unwrap();
        assert_eq!(r.rows.len(), 12);
        for row in &r.rows {
            match (row.n, row.metric) {
                (30, Metric::IotaExact) | (30, Metric::Prop17Check) => {
                    assert_eq!(row.status, RowStatus::Skipped);
                    assert_eq!(row.reason, Some(SkipReason::Capability));
                    assert!(row.value.is_none());
                }
                (30, Metric::FrSum) => assert_eq!(row.status, RowStatus::Approx),
                _ => assert_eq!(row.status, RowStatus::Ok),
            }
        }
        let c = cfg(BaseKind::Path, vec![10], 0.0, 1, vec![Metric::Longpath]);
        let r = run_sweep(&c).unwrap();
        assert_eq!(r.rows[0].reason, Some(SkipReason::Precondition));
    }

    #[test]
    fn cells_are_independent_and_deterministic() {
        let a = run_sweep(&cfg(BaseKind::Path, vec![64, 128], 0.5, 3, vec![Metric::Diameter, Metric::Longpath])).unwrap();
        let b = run_sweep(&cfg(BaseKind::Path, vec![128], 0.5, 3, vec![Metric::Diameter, Metric::Longpath])).unwrap();
        assert_eq!(a.rows[6..], b.rows[..]);
        let c = run_sweep(&cfg(BaseKind::Path, vec![64, 128], 0.5, 3, vec![Metric::Diameter, Metric::Longpath])).unwrap();
        assert_eq!(crate::harness::rows_csv(&a).unwrap(), crate::harness::rows_csv(&c).unwrap());
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&c).unwrap());
    }

    #[test]
    fn linear_fit_recovers_slope() {
        let f = fit(Metric::Diameter, GrowthModel::N, &[(10, 21.0), (20, 41.0), (40, 81.0)]).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12 && (f.intercept - 1.0).abs() < 1e-12);
        assert!((f.r2 - 1.0).abs() < 1e-12);
        assert_eq!(median(&mut [3.0, 1.0, 2.0, 10.0]), Some(2.5));
    }
}
