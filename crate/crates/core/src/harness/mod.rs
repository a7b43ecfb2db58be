//! Seeded parameter sweeps and desk-scale theorem checks.

mod calibration;
mod config;
mod output;
mod report;
mod sweep;

pub use calibration::{Calibration, DiameterCal, FrCal, LongPathCal, LowerBound, MixingCal};
pub use config::{BlobSize, EpsSpec, ExperimentConfig, Metric};
pub use output::{read_result_json, rows_csv, timings_csv, write_outputs, ResultFile};
pub use report::{applicable_reports, theorem_report, NormalizedPoint, ReportStatus, Theorem, TheoremReport};
pub use sweep::{
    cell_seed, median, run_sweep, summarize, Aggregate, ExperimentResult, Fit, GrowthModel, GrowthRatio, Row,
    RowStatus, SkipReason, Timing, PROP17_MAX_N,
};
