//! Line-oriented key/value reports.

use std::fmt::Write;

use crate::analysis::TheoremReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// `report <name>` followed by `key value` lines.
    Report,
    /// One `name<TAB>key<TAB>value` line per entry.
    Tsv,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Report => {
                writeln!(out, "report {}", self.name).unwrap();
                for (k, v) in &self.entries {
                    if v.is_empty() {
                        writeln!(out, "{k}").unwrap();
                    } else {
                        writeln!(out, "{k} {v}").unwrap();
                    }
                }
            }
            Format::Tsv => {
                for (k, v) in &self.entries {
                    writeln!(out, "{}\t{k}\t{v}", self.name).unwrap();
                }
            }
        }
        out
    }
}

impl From<&TheoremReport> for Report {
    fn from(t: &TheoremReport) -> Self {
        let mut r = Report::new(t.name);
        r.push("status", t.status);
        for (k, v) in &t.lines {
            r.push(k.clone(), v);
        }
        r
    }
}
