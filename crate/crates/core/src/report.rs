//! Machine-readable reports with a determinism digest.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::scenario::Task;

pub const REPORT_SCHEMA: &str = "kerind-report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The task could not run to completion (cap exceeded, unmet hypothesis).
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct TaskReport {
    pub index: usize,
    pub task: Task,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub assertions: Vec<Assertion>,
    pub result: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub scenario: String,
    pub tasks: Vec<TaskReport>,
    pub passed: bool,
    /// SHA-256 of the canonical JSON of `tasks`.
    pub digest: String,
}

impl Report {
    pub fn new(scenario: &str, tasks: Vec<TaskReport>) -> Self {
        let canonical = serde_json::to_string(&tasks).expect("reports serialize");
        let digest = hex::encode(Sha256::digest(canonical.as_bytes()));
        let passed = tasks.iter().all(|t| t.status == Status::Pass);
        Report {
            schema: REPORT_SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            scenario: scenario.to_string(),
            tasks,
            passed,
            digest,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn failed_assertions(&self) -> impl Iterator<Item = (&TaskReport, &Assertion)> {
        self.tasks.iter().flat_map(|t| t.assertions.iter().filter(|a| !a.passed).map(move |a| (t, a)))
    }

    /// A plain-text table, one row per task plus failing assertions.
    pub fn table(&self) -> String {
        let mut out = format!("scenario {}  (digest {})\n", self.scenario, &self.digest[..16]);
        out.push_str(&format!("{:<4} {:<16} {:<7} {:>6} {:>6}\n", "#", "command", "status", "checks", "failed"));
        for t in &self.tasks {
            let failed = t.assertions.iter().filter(|a| !a.passed).count();
            let status = match t.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            out.push_str(&format!(
                "{:<4} {:<16} {:<7} {:>6} {:>6}\n",
                t.index,
                t.task.command.name(),
                status,
                t.assertions.len(),
                failed
            ));
            if let Some(e) = &t.error {
                out.push_str(&format!("     error: {e}\n"));
            }
            for a in t.assertions.iter().filter(|a| !a.passed) {
                out.push_str(&format!("     failed: {}{}\n", a.name, a.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()));
            }
        }
        out.push_str(if self.passed { "all checks passed\n" } else { "SOME CHECKS FAILED\n" });
        out
    }
}
