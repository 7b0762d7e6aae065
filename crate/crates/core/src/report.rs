//! Machine-readable check records and their JSON/CSV serialization.
//!
//! One record per checked inequality instance. Serialization is
//! deterministic: fixed field order, shortest-roundtrip float formatting,
//! records pre-sorted by the harness.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "VIOLATION")]
    Violation,
    #[serde(rename = "SKIP")]
    Skip,
}

impl Verdict {
    pub fn from_margin(margin: f64, tolerance: f64) -> Self {
        if margin >= -tolerance {
            Verdict::Pass
        } else {
            Verdict::Violation
        }
    }
}

/// Sub-seeds of every object drawn for one check; enough to replay it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Subseeds {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<u64>,
}

/// One checked inequality: the JSON report schema, one object per check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub dim: usize,
    pub trial: usize,
    pub probe: usize,
    pub functions: Vec<String>,
    pub interval: [f64; 2],
    pub orientation: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub tolerance: f64,
    pub quad_error: f64,
    pub verdict: Verdict,
    pub subseeds: Subseeds,
}

/// Aggregate of one harness run.
#[derive(Debug, Clone)]
pub struct RunSummary {
    pub total_checks: usize,
    pub passes: usize,
    pub violations: usize,
    pub skips: usize,
    pub worst_margin: Option<(f64, String)>,
    pub wall_time_seconds: f64,
}

impl RunSummary {
    pub fn from_records(records: &[CheckRecord], wall_time_seconds: f64) -> Self {
        let mut passes = 0;
        let mut violations = 0;
        let mut skips = 0;
        let mut worst: Option<(f64, String)> = None;
        for r in records {
            match r.verdict {
                Verdict::Pass => passes += 1,
                Verdict::Violation => violations += 1,
                Verdict::Skip => {
                    skips += 1;
                    continue;
                }
            }
            let context = format!(
                "{} dim={} trial={} probe={} functions={:?}",
                r.id, r.dim, r.trial, r.probe, r.functions
            );
            match &worst {
                Some((m, _)) if *m <= r.margin => {}
                _ => worst = Some((r.margin, context)),
            }
        }
        RunSummary {
            total_checks: passes + violations,
            passes,
            violations,
            skips,
            worst_margin: worst,
            wall_time_seconds,
        }
    }
}

/// JSON array, one object per check, 2-space indentation.
pub fn records_to_json(records: &[CheckRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

/// CSV with the same field order as the JSON schema, header row included.
pub fn records_to_csv(records: &[CheckRecord]) -> String {
    let mut out = String::from(
        "id,dim,trial,probe,function_f,function_g,interval_lo,interval_hi,orientation,\
         lhs,rhs,margin,tolerance,quad_error,verdict,subseed_a,subseed_b,subseed_x\n",
    );
    for r in records {
        let f_id = r.functions.first().map(String::as_str).unwrap_or("");
        let g_id = r.functions.get(1).map(String::as_str).unwrap_or("");
        let verdict = match r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Violation => "VIOLATION",
            Verdict::Skip => "SKIP",
        };
        let opt = |v: Option<u64>| v.map(|s| s.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.id,
            r.dim,
            r.trial,
            r.probe,
            f_id,
            g_id,
            r.interval[0],
            r.interval[1],
            r.orientation,
            r.lhs,
            r.rhs,
            r.margin,
            r.tolerance,
            r.quad_error,
            verdict,
            opt(r.subseeds.a),
            opt(r.subseeds.b),
            opt(r.subseeds.x),
        ));
    }
    out
}
