//! Machine-readable reports and CSV rendering.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "specht-gtensor/report/v1";

/// One checked quantity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportItem {
    pub lambda: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u8>,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
}

impl ReportItem {
    pub fn new(lambda: impl ToString, kind: impl Into<String>) -> Self {
        Self {
            lambda: lambda.to_string(),
            d: None,
            p: None,
            kind: kind.into(),
            value: None,
            expected: None,
            verdict: None,
        }
    }

    pub fn d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }

    pub fn p(mut self, p: u8) -> Self {
        self.p = Some(p);
        self
    }

    pub fn value(mut self, v: impl Serialize) -> Self {
        self.value = Some(serde_json::to_value(v).expect("serializable"));
        self
    }

    pub fn expected(mut self, v: impl Serialize) -> Self {
        self.expected = Some(serde_json::to_value(v).expect("serializable"));
        self
    }

    pub fn verdict(mut self, ok: bool) -> Self {
        self.verdict = Some(ok);
        self
    }

    /// Failed when a verdict is present and false, or a value differs from its expectation.
    pub fn failed(&self) -> bool {
        self.verdict == Some(false) || matches!((&self.value, &self.expected), (Some(v), Some(e)) if v != e)
    }

    pub fn describe(&self) -> String {
        let mut s = format!("{} {}", self.kind, self.lambda);
        if let Some(d) = self.d {
            s.push_str(&format!(" d={d}"));
        }
        if let Some(p) = self.p {
            s.push_str(&format!(" p={p}"));
        }
        if let Some(e) = &self.expected {
            s.push_str(&format!(" expected={e}"));
        }
        if let Some(v) = &self.value {
            s.push_str(&format!(" got={v}"));
        }
        if let Some(v) = self.verdict {
            s.push_str(&format!(" verdict={v}"));
        }
        s
    }
}

/// The items of one suite plus the descriptions of those that failed.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub items: Vec<ReportItem>,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn push(&mut self, item: ReportItem) {
        if item.failed() {
            self.failures.push(item.describe());
        }
        self.items.push(item);
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }

    pub fn extend(&mut self, other: SuiteOutcome) {
        self.items.extend(other.items);
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Top-level report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub items: Vec<ReportItem>,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>, outcome: SuiteOutcome) -> Self {
        Self {
            schema: SCHEMA,
            command: command.into(),
            items: outcome.items,
            failures: outcome.failures,
            timing_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Renders rows as CSV with LF line endings. Cells containing commas or quotes are quoted.
pub fn to_csv(header: &[String], rows: &[Vec<String>]) -> String {
    fn cell(s: &str) -> String {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    }
    let mut out = String::new();
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        out.push_str(&r.iter().map(|c| cell(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}
