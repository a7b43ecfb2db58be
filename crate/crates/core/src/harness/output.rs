//! Result files: rows as CSV, the full result plus reports as JSON, and
//! wall-clock timings in a separate CSV so the first two stay byte-identical
//! across runs.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::report::TheoremReport;
use super::sweep::{ExperimentResult, Row};
use crate::error::{Error, Result};

#[derive(Serialize)]
struct CsvRow<'a> {
    n: usize,
    seed_index: usize,
    metric: &'a str,
    status: &'a str,
    value: Option<f64>,
    reason: Option<&'a str>,
    base_max_degree: usize,
    merged_edges: usize,
    note: &'a str,
}

fn csv_row(r: &Row) -> CsvRow<'_> {
    use super::sweep::{RowStatus, SkipReason};
    CsvRow {
        n: r.n,
        seed_index: r.seed_index,
        metric: r.metric.name(),
        status: match r.status {
            RowStatus::Ok => "ok",
            RowStatus::Approx => "approx",
            RowStatus::Skipped => "skipped",
        },
        value: r.value,
        reason: r.reason.map(|x| match x {
            SkipReason::Capability => "capability",
            SkipReason::Precondition => "precondition",
        }),
        base_max_degree: r.base_max_degree,
        merged_edges: r.merged_edges,
        note: &r.note,
    }
}

pub fn rows_csv(res: &ExperimentResult) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &res.rows {
        w.serialize(csv_row(r))?;
    }
    Ok(w.into_inner().map_err(|e| e.into_error())?)
}

pub fn timings_csv(res: &ExperimentResult) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "seed_index", "metric", "seconds"])?;
    for t in &res.timings {
        w.write_record([t.n.to_string(), t.seed_index.to_string(), t.metric.name().into(), format!("{:.6}", t.seconds)])?;
    }
    Ok(w.into_inner().map_err(|e| e.into_error())?)
}

/// The JSON document: the sweep result plus any theorem reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub result: ExperimentResult,
    pub reports: Vec<TheoremReport>,
}

pub fn read_result_json(path: &Path) -> Result<ResultFile> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path).map_err(Error::file(path))?)?)
}

/// Writes `<prefix>.csv`, `<prefix>.json` and `<prefix>.timings.csv`.
pub fn write_outputs(prefix: &Path, res: &ExperimentResult, reports: &[TheoremReport]) -> Result<Vec<PathBuf>> {
    let with_ext = |ext: &str| {
        let mut p = prefix.as_os_str().to_owned();
        p.push(ext);
        PathBuf::from(p)
    };
    let (csv_path, json_path, timing_path) = (with_ext(".csv"), with_ext(".json"), with_ext(".timings.csv"));
    if let Some(dir) = prefix.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(Error::file(dir))?;
    }
    std::fs::write(&csv_path, rows_csv(res)?).map_err(Error::file(&csv_path))?;
    let doc = ResultFile {
        result: res.clone(),
        reports: reports.to_vec(),
    };
    let mut f = std::fs::File::create(&json_path).map_err(Error::file(&json_path))?;
    serde_json::to_writer_pretty(&mut f, &doc)?;
    f.write_all(b"\n")?;
    std::fs::write(&timing_path, timings_csv(res)?).map_err(Error::file(&timing_path))?;
    Ok(vec![csv_path, json_path, timing_path])
}
