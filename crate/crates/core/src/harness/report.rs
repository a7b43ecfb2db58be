//! Desk-scale theorem checks over sweep results.
//!
//! Each report normalizes a metric by its predicted growth, extracts a fitted
//! constant, and compares it with the frozen calibration. A report fails with
//! `band_violated` when the fitted constant leaves its band and with
//! `trend_broken` when the growth between sizes leaves its allowed range.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::calibration::Calibration;
use super::config::Metric;
use super::sweep::{ExperimentResult, Row};
use crate::error::{Error, Result};
use crate::graph_core::BaseKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    T1_1,
    T1_2,
    T1_3,
    T1_4,
    T1_5,
    T1_6,
    P1_7,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::T1_1,
        Theorem::T1_2,
        Theorem::T1_3,
        Theorem::T1_4,
        Theorem::T1_5,
        Theorem::T1_6,
        Theorem::P1_7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T1_1 => "T1_1",
            Theorem::T1_2 => "T1_2",
            Theorem::T1_3 => "T1_3",
            Theorem::T1_4 => "T1_4",
            Theorem::T1_5 => "T1_5",
            Theorem::T1_6 => "T1_6",
            Theorem::P1_7 => "P1_7",
        }
    }

    /// The statement being checked, as a formula.
    pub fn claim(self) -> &'static str {
        match self {
            Theorem::T1_1 => "iota(G*) >= delta / (Delta^3 ln n)",
            Theorem::T1_2 => "c(G*) >= delta / ln(e n)",
            Theorem::T1_3 => "|boundary(S)| >= delta |S| for connected S, |S| <= n/2",
            Theorem::T1_4 => "diam(G*) <= C log n",
            Theorem::T1_5 => "t_mix(G*) <= M log^2 n",
            Theorem::T1_6 => "G* has a path of length c n",
            Theorem::P1_7 => "|C(v, a, b)| <= binom(a + b - 1, b)",
        }
    }

    pub fn metric(self) -> Metric {
        match self {
            Theorem::T1_1 => Metric::IotaExact,
            Theorem::T1_2 => Metric::CExact,
            Theorem::T1_3 => Metric::ConnExpansion,
            Theorem::T1_4 => Metric::Diameter,
            Theorem::T1_5 => Metric::TMix,
            Theorem::T1_6 => Metric::Longpath,
            Theorem::P1_7 => Metric::Prop17Check,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let up = s.to_ascii_uppercase().replace('.', "_");
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == up)
            .ok_or_else(|| Error::param(format!("unknown theorem '{s}' (expected T1_1..T1_6 or P1_7)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportStatus {
    Pass,
    BandViolated,
    TrendBroken,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedPoint {
    pub n: usize,
    pub median: f64,
    pub normalized: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub claim: String,
    /// How the fitted constant is formed.
    pub fitted: String,
    pub fitted_constant: f64,
    pub band: [f64; 2],
    pub points: Vec<NormalizedPoint>,
    /// Per-doubling growth of the median (ratio ^ (1 / log2(n_to / n_from))).
    pub doubling_ratios: Vec<f64>,
    pub band_ok: bool,
    pub trend_ok: Option<bool>,
    pub status: ReportStatus,
    pub flags: Vec<String>,
    pub calibration_version: u32,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.status == ReportStatus::Pass
    }
}

fn log2(n: usize) -> f64 {
    (n as f64).log2()
}

pub fn theorem_report(res: &ExperimentResult, theorem: Theorem, cal: &Calibration) -> Result<TheoremReport> {
    let metric = theorem.metric();
    if !res.has_metric(metric) {
        return Err(Error::Config(format!(
            "{theorem} needs metric '{metric}'; add it to the config's metrics list"
        )));
    }
    let rows: Vec<_> = res.rows.iter().filter(|r| r.metric == metric && r.evaluated().is_some()).collect();
    if rows.is_empty() {
        return Err(Error::Capability(format!(
            "{theorem}: every '{metric}' cell was skipped; choose sizes within the metric's limits"
        )));
    }
    let per_n = |norm: &dyn Fn(usize, f64) -> f64| -> Vec<NormalizedPoint> {
        res.config
            .n_list
            .iter()
            .filter_map(|&n| {
                res.median(metric, n).map(|m| NormalizedPoint {
                    n,
                    median: m,
                    normalized: norm(n, m),
                })
            })
            .collect()
    };
    let doubling = |pts: &[NormalizedPoint]| -> Vec<f64> {
        pts.windows(2)
            .map(|w| (w[1].median / w[0].median).powf(1.0 / (w[1].n as f64 / w[0].n as f64).log2()))
            .collect()
    };
    let row_min = |f: &dyn Fn(&Row) -> f64| rows.iter().map(|r| f(r)).fold(f64::INFINITY, f64::min);
    let mut flags = Vec::new();
    let (fitted, fitted_constant, band, points, ratios, trend_ok) = match theorem {
        Theorem::T1_1 => {
            let c = row_min(&|r| r.value.unwrap() * (r.base_max_degree.max(1) as f64).powi(3) * (r.n as f64).ln());
            let pts = per_n(&|n, m| m * n as f64);
            if res.config.base == BaseKind::Star {
                let scaled: Vec<String> = pts.iter().map(|p| format!("n={}: iota*n={:.3}", p.n, p.normalized)).collect();
                flags.push(format!(
                    "star base: unbounded max degree, iota stays of order 1/n ({})",
                    scaled.join(", ")
                ));
            }
            ("min iota * Delta^3 * ln n".into(), c, [cal.t1_1.min_constant, f64::INFINITY], pts, vec![], None)
        }
        Theorem::T1_2 => {
            let c = row_min(&|r| r.value.unwrap() * (std::f64::consts::E * r.n as f64).ln());
            let pts = per_n(&|n, m| m * (std::f64::consts::E * n as f64).ln());
            ("min c * ln(e n)".into(), c, [cal.t1_2.min_constant, f64::INFINITY], pts, vec![], None)
        }
        Theorem::T1_3 => {
            let c = row_min(&|r| r.value.unwrap());
            let pts = per_n(&|_, m| m);
            ("min connected-set edge expansion".into(), c, [cal.t1_3.min_constant, f64::INFINITY], pts, vec![], None)
        }
        Theorem::T1_4 => {
            let pts = per_n(&|n, m| m / log2(n));
            let c = pts.iter().map(|p| p.normalized).fold(0.0, f64::max);
            let reference = pts
                .iter()
                .find(|p| p.n == cal.t1_4.reference_n)
                .unwrap_or(&pts[0])
                .normalized;
            let tol = cal.t1_4.trend_tolerance;
            let ok = pts.iter().all(|p| (p.normalized - reference).abs() <= tol * reference);
            let r = doubling(&pts);
            ("max median(diameter) / log2 n".into(), c, [0.0, cal.t1_4.max_constant], pts, r, Some(ok))
        }
        Theorem::T1_5 => {
            let pts = per_n(&|n, m| m / (log2(n) * log2(n)));
            let c = pts.iter().map(|p| p.normalized).fold(0.0, f64::max);
            let r = doubling(&pts);
            let ok = r.iter().all(|&x| x <= cal.t1_5.max_doubling_ratio);
            ("max median(t_mix) / log2(n)^2".into(), c, cal.t1_5.band, pts, r, Some(ok))
        }
        Theorem::T1_6 => {
            let pts = per_n(&|n, m| m / n as f64);
            let c = pts.iter().map(|p| p.normalized).fold(f64::INFINITY, f64::min);
            let r = doubling(&pts);
            let [lo, hi] = cal.t1_6.doubling_ratio;
            let ok = r.iter().all(|&x| (lo..=hi).contains(&x));
            ("min median(path length) / n".into(), c, [cal.t1_6.min_fraction, f64::INFINITY], pts, r, Some(ok))
        }
        Theorem::P1_7 => {
            let total: f64 = rows.iter().map(|r| r.value.unwrap()).sum();
            let pts = per_n(&|_, m| m);
            ("total counting-bound violations".into(), total, [0.0, 0.0], pts, vec![], None)
        }
    };
    let skipped = res.rows.iter().filter(|r| r.metric == metric && r.evaluated().is_none()).count();
    if skipped > 0 {
        flags.push(format!("{skipped} '{metric}' cells skipped"));
    }
    let band_ok = fitted_constant >= band[0] && fitted_constant <= band[1];
    let status = if !band_ok {
        ReportStatus::BandViolated
    } else if trend_ok == Some(false) {
        ReportStatus::TrendBroken
    } else {
        ReportStatus::Pass
    };
    Ok(TheoremReport {
        theorem,
        claim: theorem.claim().into(),
        fitted,
        fitted_constant,
        band,
        points,
        doubling_ratios: ratios,
        band_ok,
        trend_ok,
        status,
        flags,
        calibration_version: cal.version,
    })
}

/// Reports for every theorem whose metric the config measured.
pub fn applicable_reports(res: &ExperimentResult, cal: &Calibration) -> Result<Vec<TheoremReport>> {
    Theorem::ALL
        .into_iter()
        .filter(|t| res.has_metric(t.metric()))
        .map(|t| theorem_report(res, t, cal))
        .collect()
}
