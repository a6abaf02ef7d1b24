use serde::Serialize;

use crate::analysis::CheckResult;

/// Machine-readable check report:
/// `{graph_id, checks: [{name, status, value, witnesses}]}`, with values as
/// `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub graph_id: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(graph_id: impl Into<String>, checks: Vec<CheckResult>) -> Self {
        Report { graph_id: graph_id.into(), checks }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}
