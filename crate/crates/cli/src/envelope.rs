//! The JSON wrapper around every machine-readable report.

use boolspec::search::{Objective, SearchConfig};
use boolspec::{AnalysisReport, ExhaustiveSummary, PointSet, TheoremReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub schema_version: String,
    /// Arguments after the program name.
    pub command: Vec<String>,
    /// FNV-1a 64 of the canonical input bytes, as 16 hex digits.
    pub input_digest: String,
    pub payload: Payload,
    /// Wall time; `None` under `--reproducible`.
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Analysis(Box<AnalysisReport>),
    Exhaustive(ExhaustiveSummary),
    Search(SearchSummary),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub config: SearchConfig,
    pub records: usize,
    pub accepted: usize,
    pub best_restart: usize,
    pub best: PointSet,
    pub best_objective: Objective,
    pub best_objective_float: Option<f64>,
    pub best_report: Option<TheoremReport>,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    bytes.iter().fold(FNV_OFFSET, |h, &b| (h ^ u64::from(b)).wrapping_mul(FNV_PRIME))
}

pub fn digest_hex(bytes: &[u8]) -> String {
    format!("{:016x}", fnv1a64(bytes))
}
