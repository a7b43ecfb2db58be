use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const FROZEN: &str = include_str!("../../calibration.toml");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LowerBound {
    pub min_constant: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiameterCal {
    pub max_constant: f64,
    pub trend_tolerance: f64,
    pub reference_n: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MixingCal {
    pub band: [f64; 2],
    pub max_doubling_ratio: f64,
    pub two_clique_factor: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LongPathCal {
    pub min_fraction: f64,
    pub doubling_ratio: [f64; 2],
    pub base_multiple: f64,
    pub star_max_length: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrCal {
    pub ratio_cal: f64,
}

/// Frozen regression thresholds, versioned alongside the code.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Calibration {
    pub version: u32,
    pub root_seed: u64,
    pub t1_1: LowerBound,
    pub t1_2: LowerBound,
    pub t1_3: LowerBound,
    pub t1_4: DiameterCal,
    pub t1_5: MixingCal,
    pub t1_6: LongPathCal,
    pub fr: FrCal,
}

impl Calibration {
    pub fn frozen() -> Self {
        Self::parse(FROZEN).expect("checked-in calibration parses")
    }

    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(format!("calibration: {}", e.message())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_file_parses() {
        let c = Calibration::frozen();
        assert!(c.version >= 1);
        assert!(c.t1_5.band[0] < c.t1_5.band[1]);
    }
}
