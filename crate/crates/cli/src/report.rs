use std::fmt::Write as _;

use serde_json::{json, Map, Value};

/// One command's output. JSON keys come out sorted because `serde_json`'s
/// default map is ordered.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub provenance_notes: Vec<String>,
    /// Human-oriented body for `--format text`; not part of the JSON.
    pub text: Vec<String>,
    pub generated_at: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results: Value::Null,
            provenance_notes: Vec::new(),
            text: Vec::new(),
            generated_at: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), json!(self.command));
        map.insert("inputs".into(), self.inputs.clone());
        map.insert("results".into(), self.results.clone());
        map.insert("provenance_notes".into(), json!(self.provenance_notes));
        if let Some(t) = self.generated_at {
            map.insert("generated_at_unix".into(), json!(t));
        }
        Value::Object(map)
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(&self.to_json()).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = String::new();
                writeln!(s, "stmodk {}", self.command).unwrap();
                for line in &self.text {
                    writeln!(s, "{line}").unwrap();
                }
                if !self.provenance_notes.is_empty() {
                    writeln!(s, "provenance:").unwrap();
                    for note in &self.provenance_notes {
                        writeln!(s, "  - {note}").unwrap();
                    }
                }
                if let Some(t) = self.generated_at {
                    writeln!(s, "generated_at_unix: {t}").unwrap();
                }
                s
            }
        }
    }
}

pub fn error_json(code: &str, message: &str) -> String {
    let v = json!({ "error": { "code": code, "message": message } });
    format!("{v}\n")
}
