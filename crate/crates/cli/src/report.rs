use std::collections::BTreeMap;
use std::fmt;

use pbounded::rational::{to_pq, Rational};
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(UsageError(msg.into()).into())
}

#[derive(Clone, Copy, Debug)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize, Debug, Clone)]
pub struct Check {
    pub name: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            status: if passed { "pass" } else { "fail" },
            value: None,
            counterexample: None,
            detail: None,
        }
    }

    pub fn value(mut self, v: &Rational) -> Self {
        self.value = Some(to_pq(v));
        self
    }

    pub fn counterexample(mut self, c: Option<Vec<String>>) -> Self {
        self.counterexample = c;
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Serialize, Debug)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    #[serde(flatten)]
    pub data: Map<String, Value>,
    pub checks: Vec<Check>,
    pub passed: bool,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.into(),
            parameters: BTreeMap::new(),
            data: Map::new(),
            checks: Vec::new(),
            passed: true,
            elapsed_ms: 0,
            table: None,
        }
    }

    pub fn set_param(&mut self, k: &str, v: impl Serialize) {
        self.parameters
            .insert(k.into(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn set(&mut self, k: &str, v: impl Serialize) {
        self.data
            .insert(k.into(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn check(&mut self, c: Check) {
        self.passed &= c.passed();
        self.checks.push(c);
    }

    /// Also mirrored into the JSON output as `rows`.
    pub fn set_table(&mut self, table: Table) {
        let rows: Vec<Value> = table
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = table
                    .header
                    .iter()
                    .cloned()
                    .zip(r.iter().map(|c| Value::String(c.clone())))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        self.set("rows", rows);
        self.table = Some(table);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => match &self.table {
                Some(t) => csv(&t.header, &t.rows),
                None => {
                    let header = ["name", "status", "value", "counterexample"].map(String::from);
                    let rows: Vec<Vec<String>> = self
                        .checks
                        .iter()
                        .map(|c| {
                            vec![
                                c.name.clone(),
                                c.status.into(),
                                c.value.clone().unwrap_or_default(),
                                c.counterexample
                                    .as_ref()
                                    .map(|v| v.join(" "))
                                    .unwrap_or_default(),
                            ]
                        })
                        .collect();
                    csv(&header, &rows)
                }
            },
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for line in std::iter::once(header).chain(rows.iter().map(|r| r.as_slice())) {
        let cells: Vec<String> = line.iter().map(|c| csv_field(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("x\"y"), "\"x\"\"y\"");
        assert_eq!(csv_field("plain"), "plain");
    }

    #[test]
    fn failing_check_fails_report() {
        let mut r = RunReport::new("t");
        r.check(Check::new("a", true));
        assert!(r.passed);
        r.check(Check::new("b", false));
        assert!(!r.passed);
        let text = r.render(Format::Csv);
        assert!(text.starts_with("name,status,value,counterexample\na,pass"));
    }
}
