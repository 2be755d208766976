use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::config::{Identity, SuiteConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    RejectedSample,
}

/// A check whose two sides differ, with both sides as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailedCheck {
    pub check: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub identity: Identity,
    pub n: usize,
    pub trial: u32,
    pub seed_offset: u64,
    pub parameters: Map<String, Value>,
    pub status: Status,
    pub checks: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<FailedCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejection: Option<String>,
    pub elapsed_micros: u64,
}

impl TrialRecord {
    fn sort_key(&self) -> (Identity, usize, u32) {
        (self.identity, self.n, self.trial)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub rejected_sample: usize,
}

impl Counts {
    fn add(&mut self, status: Status) {
        self.total += 1;
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::RejectedSample => self.rejected_sample += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    #[serde(flatten)]
    pub overall: Counts,
    pub by_identity: BTreeMap<String, Counts>,
}

impl Summary {
    pub fn tally(records: &[TrialRecord]) -> Summary {
        let mut s = Summary::default();
        for r in records {
            s.overall.add(r.status);
            s.by_identity
                .entry(r.identity.name().to_string())
                .or_default()
                .add(r.status);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub config: SuiteConfig,
    pub summary: Summary,
    pub records: Vec<TrialRecord>,
}

impl Report {
    /// Sorts the records by (identity, n, trial) and recomputes the summary.
    pub fn new(config: SuiteConfig, mut records: Vec<TrialRecord>) -> Report {
        records.sort_by_key(TrialRecord::sort_key);
        Report {
            schema: SCHEMA_VERSION,
            tool: "qid",
            version: env!("CARGO_PKG_VERSION"),
            config,
            summary: Summary::tally(&records),
            records,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.overall.fail == 0 && self.summary.overall.rejected_sample == 0
    }

    /// Process exit status: 0 when every cell passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    /// The report with all timings zeroed, for equality comparisons.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for rec in &mut r.records {
            rec.elapsed_micros = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "qid {} verify: seed {}, n {}..={}, {} trials",
            self.version,
            self.config.seed,
            self.config.n_min,
            self.config.n_max,
            self.config.trials
        );
        let _ = writeln!(
            out,
            "{:<20} {:>7} {:>7} {:>7} {:>9}",
            "identity", "cells", "pass", "fail", "rejected"
        );
        for (name, c) in &self.summary.by_identity {
            let _ = writeln!(
                out,
                "{:<20} {:>7} {:>7} {:>7} {:>9}",
                name, c.total, c.pass, c.fail, c.rejected_sample
            );
        }
        let c = &self.summary.overall;
        let _ = writeln!(
            out,
            "{:<20} {:>7} {:>7} {:>7} {:>9}",
            "total", c.total, c.pass, c.fail, c.rejected_sample
        );
        for r in self.records.iter().filter(|r| r.status != Status::Pass) {
            let _ = write!(
                out,
                "\n{} n={} trial={}: {:?}",
                r.identity, r.n, r.trial, r.status
            );
            if let Some(e) = r.error.as_ref().or(r.rejection.as_ref()) {
                let _ = write!(out, " ({e})");
            }
            for f in &r.failures {
                let _ = write!(out, "\n  {}: {} != {}", f.check, f.lhs, f.rhs);
            }
        }
        out.push('\n');
        out
    }
}
