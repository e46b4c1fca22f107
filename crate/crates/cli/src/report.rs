//! Machine-readable and human-readable command output.

use std::fmt::Write as _;

use hyperfuse::scalar::approx_string;
use hyperfuse::{QuadScalar, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExitStatus {
    Ok,
    InvalidInput,
    Undecidable,
    InternalError,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Ok => 0,
            ExitStatus::InvalidInput => 2,
            ExitStatus::Undecidable => 3,
            ExitStatus::InternalError => 4,
        }
    }
}

/// A report cell. Scalars carry the exact canonical string, which is
/// authoritative, and a 12-place decimal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Scalar { exact: String, approx: String },
    Text(String),
    Int(i64),
    Bool(bool),
    List(Vec<Value>),
}

impl Value {
    pub fn quad(q: &QuadScalar) -> Value {
        Value::Scalar {
            exact: q.to_string(),
            approx: format!("{:.12}", q.to_f64()),
        }
    }

    pub fn scalar(s: &Scalar) -> Value {
        Value::Scalar {
            exact: s.to_string(),
            approx: approx_string(s, 12),
        }
    }

    pub fn text(s: impl Into<String>) -> Value {
        Value::Text(s.into())
    }

    pub fn labels<S: AsRef<str>>(items: impl IntoIterator<Item = S>) -> Value {
        Value::List(items.into_iter().map(|s| Value::text(s.as_ref())).collect())
    }

    fn render(&self) -> String {
        match self {
            Value::Scalar { exact, approx } => {
                if exact.contains("sqrt") || exact.contains('[') {
                    format!("{exact} ≈ {approx}")
                } else {
                    exact.clone()
                }
            }
            Value::Text(s) => s.clone(),
            Value::Int(i) => i.to_string(),
            Value::Bool(b) => if *b { "yes" } else { "no" }.to_string(),
            Value::List(v) => format!("{{{}}}", v.iter().map(Value::render).collect::<Vec<_>>().join(", ")),
        }
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&QuadScalar> for Value {
    fn from(v: &QuadScalar) -> Self {
        Value::quad(v)
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Table { columns: Vec<String>, rows: Vec<Vec<Value>> },
    KeyValue { entries: Vec<(String, Value)> },
    Verdict { passed: bool, text: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub body: Body,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub subject: String,
    pub command: String,
    pub sections: Vec<Section>,
    pub exit_status: ExitStatus,
}

impl AnalysisReport {
    pub fn new(command: &str, subject: impl Into<String>) -> Self {
        AnalysisReport {
            subject: subject.into(),
            command: command.to_string(),
            sections: Vec::new(),
            exit_status: ExitStatus::Ok,
        }
    }

    pub fn kv(&mut self, title: &str, entries: Vec<(&str, Value)>) -> &mut Self {
        self.sections.push(Section {
            title: title.to_string(),
            body: Body::KeyValue {
                entries: entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            },
        });
        self
    }

    pub fn table(&mut self, title: &str, columns: &[&str], rows: Vec<Vec<Value>>) -> &mut Self {
        self.sections.push(Section {
            title: title.to_string(),
            body: Body::Table {
                columns: columns.iter().map(|c| c.to_string()).collect(),
                rows,
            },
        });
        self
    }

    pub fn verdict(&mut self, title: &str, passed: bool, text: impl Into<String>) -> &mut Self {
        self.sections.push(Section {
            title: title.to_string(),
            body: Body::Verdict {
                passed,
                text: text.into(),
            },
        });
        self
    }

    pub fn section(&self, title: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.title == title)
    }

    /// Value under `key` in the key-value section `title`.
    pub fn entry(&self, title: &str, key: &str) -> Option<&Value> {
        match &self.section(title)?.body {
            Body::KeyValue { entries } => entries.iter().find(|(k, _)| k == key).map(|(_, v)| v),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} :: {}", self.command, self.subject).unwrap();
        for s in &self.sections {
            writeln!(out, "\n{}", s.title).unwrap();
            match &s.body {
                Body::KeyValue { entries } => {
                    let width = entries.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                    for (k, v) in entries {
                        writeln!(out, "  {k:width$}  {}", v.render()).unwrap();
                    }
                }
                Body::Table { columns, rows } => {
                    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(Value::render).collect()).collect();
                    let widths: Vec<usize> = (0..columns.len())
                        .map(|c| {
                            cells
                                .iter()
                                .filter_map(|r| r.get(c))
                                .chain(std::iter::once(&columns[c]))
                                .map(|x| x.chars().count())
                                .max()
                                .unwrap_or(0)
                        })
                        .collect();
                    let line = |items: &[String]| {
                        items
                            .iter()
                            .zip(&widths)
                            .map(|(x, w)| format!("{x:w$}"))
                            .collect::<Vec<_>>()
                            .join("  ")
                            .trim_end()
                            .to_string()
                    };
                    writeln!(out, "  {}", line(columns)).unwrap();
                    for r in &cells {
                        writeln!(out, "  {}", line(r)).unwrap();
                    }
                }
                Body::Verdict { passed, text } => {
                    writeln!(out, "  {}: {text}", if *passed { "PASS" } else { "FAIL" }).unwrap();
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = AnalysisReport::new("info", "K(2)");
        r.kv(
            "summary",
            vec![
                ("D(K)", Value::quad(&"3".parse().unwrap())),
                ("weight", Value::quad(&"(2+1*sqrt(3))/1".parse().unwrap())),
                ("group", false.into()),
                ("size", 2usize.into()),
                ("members", Value::labels(["e", "g"])),
            ],
        )
        .table("weights", &["element", "w"], vec![vec!["c1".into(), 2i64.into()]])
        .verdict("check", true, "holds");
        let back = AnalysisReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let human = r.to_human();
        assert!(human.contains("(2+1*sqrt(3))/1 ≈ 3.732050807569"));
        assert!(human.contains("PASS: holds"));
        assert_eq!(ExitStatus::Undecidable.code(), 3);
    }
}
