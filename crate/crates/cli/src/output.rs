//! One payload per command, renderable as JSON, TSV or plain text.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Ascii,
}

pub struct Output {
    pub json: Value,
    /// Header row first.
    pub table: Vec<Vec<String>>,
    pub text: String,
    /// False when the command found a counterexample.
    pub passed: bool,
}

impl Output {
    pub fn new(json: Value, table: Vec<Vec<String>>, text: String) -> Self {
        Output {
            json,
            table,
            text,
            passed: true,
        }
    }

    pub fn failing_if(mut self, failed: bool) -> Self {
        self.passed = !failed;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable") + "\n",
            Format::Tsv => {
                let mut s = String::new();
                for row in &self.table {
                    writeln!(s, "{}", row.join("\t")).unwrap();
                }
                s
            }
            Format::Ascii => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        }
    }
}

pub fn row<I, S>(cells: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: ToString,
{
    cells.into_iter().map(|c| c.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_each_format() {
        let out = Output::new(json!({ "a": 1 }), vec![row(["a"]), row([1])], "one".into());
        assert_eq!(out.render(Format::Json), "{\n  \"a\": 1\n}\n");
        assert_eq!(out.render(Format::Tsv), "a\n1\n");
        assert_eq!(out.render(Format::Ascii), "one\n");
        assert!(out.passed);
        assert!(!out.failing_if(true).passed);
    }
}
