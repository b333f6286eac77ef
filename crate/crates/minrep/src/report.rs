//! Suite reports and their JSON, CSV and text serializations.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use minrep_core::report::{Expect, Report};
use serde::{Deserialize, Serialize};

use crate::config::Format;
use crate::RunError;

/// Environment variable naming the directory for report files.
pub const OUT_DIR_VAR: &str = "MINREP_OUT_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    /// `suite/check`.
    pub id: String,
    pub anchor: String,
    pub expect: Expectation,
    pub holds: bool,
    pub pass: bool,
    pub defect: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub negative_controls: usize,
}

/// One row of the dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Line {
    pub label: String,
    pub dim_g: usize,
    #[serde(rename = "H_label")]
    pub h_label: String,
    pub dim_g1: usize,
    pub gk_dim: usize,
    pub eq27_ok: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub command: String,
    pub records: Vec<Record>,
    pub summary: Summary,
    /// Command-specific results (tables, fitted coefficients, histograms).
    pub details: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table1: Option<Vec<Table1Line>>,
    /// Wall time per suite in milliseconds; absent in stable mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl SuiteReport {
    pub fn new(command: &str) -> Self {
        SuiteReport { command: command.to_string(), ..Default::default() }
    }

    pub fn add(&mut self, report: &Report) {
        for c in &report.checks {
            self.records.push(Record {
                id: format!("{}/{}", report.title, c.id),
                anchor: c.anchor.clone(),
                expect: match c.expect {
                    Expect::Holds => Expectation::Holds,
                    Expect::Fails => Expectation::Fails,
                },
                holds: c.holds,
                pass: c.ok(),
                defect: c.defect.clone(),
            });
        }
    }

    /// Runs `f`, adds its report and records the elapsed time under its title.
    pub fn timed<E>(&mut self, f: impl FnOnce() -> Result<Report, E>) -> Result<(), E> {
        let start = Instant::now();
        let r = f()?;
        let ms = start.elapsed().as_millis() as u64;
        *self.timings_ms.get_or_insert_with(BTreeMap::new).entry(r.title.clone()).or_insert(0) += ms;
        self.add(&r);
        Ok(())
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.to_string(), serde_json::to_value(value).expect("serializable detail"));
    }

    /// Sorts records by id, fills the summary and, in stable mode, drops timings.
    pub fn finalize(&mut self, stable: bool) {
        self.records.sort_by(|a, b| a.id.cmp(&b.id));
        self.summary = Summary {
            total: self.records.len(),
            passed: self.records.iter().filter(|r| r.pass).count(),
            failed: self.records.iter().filter(|r| !r.pass).count(),
            negative_controls: self.records.iter().filter(|r| r.expect == Expectation::Fails).count(),
        };
        if stable {
            self.timings_ms = None;
        }
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn find(&self, id: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.id == id)
    }

    /// JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("serializable report");
        let mut s = serde_json::to_string_pretty(&v).expect("serializable report");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// The dimension table when present, otherwise one line per record.
    pub fn to_csv(&self) -> Result<String, RunError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| RunError::Internal(format!("csv: {}", e));
        if let Some(rows) = &self.table1 {
            for row in rows {
                w.serialize(row).map_err(io)?;
            }
        } else {
            w.write_record(["id", "anchor", "expect", "holds", "pass", "defect"]).map_err(io)?;
            for r in &self.records {
                let expect = match r.expect {
                    Expectation::Holds => "holds",
                    Expectation::Fails => "fails",
                };
                let (holds, pass) = (r.holds.to_string(), r.pass.to_string());
                w.write_record([r.id.as_str(), &r.anchor, expect, &holds, &pass, r.defect.as_deref().unwrap_or("")]).map_err(io)?;
            }
        }
        let bytes = w.into_inner().map_err(|e| RunError::Internal(format!("csv: {}", e)))?;
        String::from_utf8(bytes).map_err(|e| RunError::Internal(format!("csv: {}", e)))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            let tag = if r.pass { "PASS" } else { "FAIL" };
            let neg = if r.expect == Expectation::Fails { " (negative control)" } else { "" };
            s.push_str(&format!("{} {} [{}]{}", tag, r.id, r.anchor, neg));
            if !r.pass {
                if let Some(d) = &r.defect {
                    s.push_str(&format!(": {}", d));
                }
            }
            s.push('\n');
        }
        if let Some(rows) = &self.table1 {
            s.push_str("\nlabel  dim_g  H  dim_g1  gk_dim  eq27_ok\n");
            for r in rows {
                s.push_str(&format!("{}  {}  {}  {}  {}  {}\n", r.label, r.dim_g, r.h_label, r.dim_g1, r.gk_dim, r.eq27_ok));
            }
        }
        for (k, v) in &self.details {
            s.push_str(&format!("{}: {}\n", k, v));
        }
        if let Some(t) = &self.timings_ms {
            for (k, v) in t {
                s.push_str(&format!("time {}: {} ms\n", k, v));
            }
        }
        let m = &self.summary;
        s.push_str(&format!(
            "{}: {} checks, {} passed, {} failed ({} negative controls)\n",
            self.command, m.total, m.passed, m.failed, m.negative_controls
        ));
        s
    }

    pub fn render(&self, format: Format) -> Result<String, RunError> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
            Format::Text => Ok(self.to_text()),
        }
    }
}

/// Where a report goes: an explicit path (relative paths resolved against
/// `MINREP_OUT_DIR` when set), `MINREP_OUT_DIR/<command>.<ext>`, or stdout.
pub fn output_path(output: Option<&Path>, out_dir: Option<&Path>, command: &str, format: Format) -> Option<PathBuf> {
    match (output, out_dir) {
        (Some(p), Some(d)) if p.is_relative() => Some(d.join(p)),
        (Some(p), _) => Some(p.to_path_buf()),
        (None, Some(d)) => Some(d.join(format!("{}.{}", command, format.extension()))),
        (None, None) => None,
    }
}

pub fn emit_report(report: &SuiteReport, format: Format, path: Option<&Path>) -> Result<(), RunError> {
    let body = report.render(format)?;
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| RunError::Io(format!("{}: {}", dir.display(), e)))?;
            }
            std::fs::write(p, body).map_err(|e| RunError::Io(format!("{}: {}", p.display(), e)))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes()).map_err(|e| RunError::Io(format!("stdout: {}", e)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SuiteReport {
        let mut r = Report::new("s");
        r.record("b", "x", None);
        r.record_negative("a", "y", Some("1".into()));
        let mut s = SuiteReport::new("demo");
        s.add(&r);
        s.finalize(true);
        s
    }

    #[test]
    fn sorted_and_summarized() {
        let s = sample();
        assert_eq!(s.records[0].id, "s/a");
        assert_eq!(s.summary, Summary { total: 2, passed: 2, failed: 0, negative_controls: 1 });
        assert!(s.passed());
    }

    #[test]
    fn json_round_trip() {
        let s = sample();
        assert_eq!(SuiteReport::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn out_dir_resolution() {
        let d = Path::new("/tmp/out");
        assert_eq!(output_path(None, Some(d), "table1", Format::Csv), Some(d.join("table1.csv")));
        assert_eq!(output_path(Some(Path::new("r.json")), Some(d), "x", Format::Json), Some(d.join("r.json")));
        assert_eq!(output_path(Some(Path::new("/abs.json")), Some(d), "x", Format::Json), Some(PathBuf::from("/abs.json")));
        assert_eq!(output_path(None, None, "x", Format::Text), None);
    }
}
