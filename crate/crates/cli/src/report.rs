//! Verification reports and their text, JSON and CSV renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Observation,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Observation => "OBSERVATION",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub inputs: Value,
    pub status: Status,
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, inputs: Value, status: Status, witness: Value) -> Self {
        CheckRecord {
            id: id.into(),
            inputs,
            status,
            witness,
            wall_ms: None,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub observation: usize,
}

/// Everything a verification command produces. Wall times are left out
/// unless asked for, so that the same config and seed give identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config: Value,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(command: &str, config: Value) -> Self {
        VerificationReport {
            tool: "ec",
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            config,
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, rec: CheckRecord) {
        match rec.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Observation => self.summary.observation += 1,
        }
        self.checks.push(rec);
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn to_csv(&self) -> String {
        let timed = self.checks.iter().any(|c| c.wall_ms.is_some());
        let mut header = vec!["id", "status", "inputs", "witness"];
        if timed {
            header.push("wall_ms");
        }
        let mut rows = vec![header.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
        for c in &self.checks {
            let mut row = vec![
                c.id.clone(),
                serde_json::to_value(c.status)
                    .expect("status")
                    .as_str()
                    .unwrap_or_default()
                    .into(),
                c.inputs.to_string(),
                c.witness.to_string(),
            ];
            if timed {
                row.push(c.wall_ms.map_or(String::new(), |t| format!("{t:.3}")));
            }
            rows.push(row);
        }
        to_csv(rows)
    }

    fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .checks
            .iter()
            .map(|c| {
                let mut row = vec![c.id.clone(), c.status.as_str().into(), compact(&c.witness)];
                if let Some(t) = c.wall_ms {
                    row.push(format!("{t:.1}ms"));
                }
                row
            })
            .collect();
        let mut out = aligned(&rows);
        let _ = writeln!(
            out,
            "{}: {} pass, {} fail, {} observation",
            self.command, self.summary.pass, self.summary.fail, self.summary.observation
        );
        out
    }
}

/// Witness values in text form: strings unquoted, null as `-`, nested
/// objects in braces.
fn compact(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", inner(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => inner(other),
    }
}

fn inner(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Object(_) => format!("{{{}}}", compact(v)),
        Value::Array(a) => format!("[{}]", a.iter().map(inner).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn to_csv(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
}

/// Left-aligned columns separated by two spaces; trailing spaces trimmed.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| {
            rows.iter()
                .filter_map(|r| r.get(i))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{s:<w$}", w = widths[i]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Right-aligned numeric columns, for tables of integers.
pub fn aligned_right(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| {
            rows.iter()
                .filter_map(|r| r.get(i))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{s:>w$}", w = widths[i]))
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn empty_report_is_valid() {
        let r = VerificationReport::new("verify-symmetry", json!({}));
        let v: Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(v["checks"], json!([]));
        assert_eq!(v["summary"]["fail"], 0);
        assert!(r.passed());
        assert_eq!(r.render(Format::Csv), "id,status,inputs,witness\n");
    }

    #[test]
    fn failing_record_counts() {
        let mut r = VerificationReport::new("x", json!({}));
        r.push(CheckRecord::new(
            "a",
            json!({"n": 2}),
            Status::Fail,
            json!({"why": "w"}),
        ));
        r.push(CheckRecord::new("b", json!({"n": 3}), Status::Pass, Value::Null));
        assert!(!r.passed());
        let text = r.render(Format::Text);
        assert!(text.starts_with("a  FAIL  why=w\nb  PASS  -\n"), "{text}");
        assert!(r
            .render(Format::Csv)
            .contains("a,fail,\"{\"\"n\"\":2}\",\"{\"\"why\"\":\"\"w\"\"}\""));
    }

    #[test]
    fn alignment() {
        let rows = vec![vec!["1".into(), "22".into()], vec!["333".into(), "4".into()]];
        assert_eq!(aligned(&rows), "1    22\n333  4\n");
        assert_eq!(aligned_right(&rows), "  1 22\n333  4\n");
    }
}
