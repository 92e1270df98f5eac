//! One row of a verification report, and the JSON and CSV renderings of a
//! whole report.

use serde::{Deserialize, Serialize};
use std::time::Instant;

use crate::error::{LerchError, Result};

/// Outcome of a single identity check. `passed` is always `residual <= tolerance`;
/// a NaN residual fails.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: String,
    pub params: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub runtime_ms: u64,
}

impl ReportRecord {
    pub fn new(identity: impl Into<String>, params: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        ReportRecord {
            identity: identity.into(),
            params: params.into(),
            residual,
            tolerance,
            passed: residual <= tolerance,
            runtime_ms: 0,
        }
    }

    /// Stamps the elapsed time since `start`.
    pub fn timed(mut self, start: Instant) -> Self {
        self.runtime_ms = start.elapsed().as_millis() as u64;
        self
    }

    /// Re-judges the record against another tolerance.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self.passed = self.residual <= tolerance;
        self
    }
}

/// Pretty-printed JSON array, newline-terminated.
pub fn to_json(records: &[ReportRecord]) -> String {
    let mut out = serde_json::to_string_pretty(records).expect("records always serialize");
    out.push('\n');
    out
}

pub fn from_json(text: &str) -> Result<Vec<ReportRecord>> {
    serde_json::from_str(text).map_err(|e| LerchError::Config(format!("not a report: {e}")))
}

/// CSV with header `identity,params,residual,tolerance,passed,runtime_ms`.
pub fn to_csv(records: &[ReportRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if records.is_empty() {
        w.write_record(["identity", "params", "residual", "tolerance", "passed", "runtime_ms"]).expect("in-memory write");
    }
    for r in records {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let recs = vec![ReportRecord::new("a = b", "m=2, p=inf", 1.5e-12, 1e-8), ReportRecord::new("x", "", f64::MAX, 0.0)];
        assert_eq!(from_json(&to_json(&recs)).unwrap(), recs);
        assert!(from_json("{}").is_err());
    }

    #[test]
    fn csv_layout() {
        let csv = to_csv(&[ReportRecord::new("T_m T_n = T_mn", "m,n<=6", 1e-15, 1e-11)]);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("identity,params,residual,tolerance,passed,runtime_ms"));
        assert_eq!(lines.next(), Some("T_m T_n = T_mn,\"m,n<=6\",1e-15,1e-11,true,0"));
        assert_eq!(to_csv(&[]), "identity,params,residual,tolerance,passed,runtime_ms\n");
    }

    #[test]
    fn passed_tracks_tolerance() {
        assert!(ReportRecord::new("x", "", 1e-9, 1e-8).passed);
        assert!(!ReportRecord::new("x", "", 1e-7, 1e-8).passed);
        assert!(!ReportRecord::new("x", "", f64::NAN, 1.0).passed);
        assert!(!ReportRecord::new("x", "", 1e-9, 1e-8).with_tolerance(0.0).passed);
    }
}
