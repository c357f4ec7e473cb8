//! Command output: human-readable lines plus a parallel key/value tree.

use std::io::Write;
use std::path::Path;

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    /// Nested JSON; big integers and rationals are strings, no floats.
    Tree,
}

#[derive(Debug)]
pub struct Report {
    lines: Vec<String>,
    tree: Map<String, Value>,
    checks: Vec<Value>,
    failures: usize,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut tree = Map::new();
        tree.insert("command".into(), command.into());
        Report {
            lines: Vec::new(),
            tree,
            checks: Vec::new(),
            failures: 0,
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.tree.insert(key.into(), value.into());
    }

    /// Records a named verdict in both renderings.
    pub fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        let detail = detail.into();
        let status = if pass { "PASS" } else { "FAIL" };
        if detail.is_empty() {
            self.lines.push(format!("{status} {name}"));
        } else {
            self.lines.push(format!("{status} {name}: {detail}"));
        }
        let mut entry = Map::new();
        entry.insert("name".into(), name.into());
        entry.insert("pass".into(), pass.into());
        entry.insert("detail".into(), detail.into());
        self.checks.push(Value::Object(entry));
        if !pass {
            self.failures += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn check_count(&self) -> usize {
        self.checks.len()
    }

    pub fn failures(&self) -> usize {
        self.failures
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.lines.iter().map(|l| format!("{l}\n")).collect(),
            Format::Tree => {
                let mut tree = self.tree.clone();
                if !self.checks.is_empty() {
                    tree.insert("checks".into(), Value::Array(self.checks.clone()));
                }
                tree.insert("pass".into(), self.passed().into());
                let mut text =
                    serde_json::to_string_pretty(&Value::Object(tree)).expect("tree serializes");
                text.push('\n');
                text
            }
        }
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> std::io::Result<()> {
        let text = self.render(format);
        match out {
            Some(path) => std::fs::write(path, text),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                stdout.flush()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_renderings() {
        let mut r = Report::new("demo");
        r.set("n", 3);
        r.check("first", true, "");
        r.check("second", false, "1 != 2");
        assert!(!r.passed());
        assert_eq!(r.render(Format::Plain), "PASS first\nFAIL second: 1 != 2\n");
        let v: Value = serde_json::from_str(&r.render(Format::Tree)).unwrap();
        assert_eq!(v["command"], "demo");
        assert_eq!(v["checks"][1]["pass"], false);
        assert_eq!(v["pass"], false);
    }
}
