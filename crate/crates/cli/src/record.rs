//! Output records and their JSON / CSV encodings.
//!
//! Every value is a string, an integer, a boolean or null, so a record
//! re-serializes byte for byte after parsing.

use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub results: Map<String, Value>,
}

impl OutputRecord {
    pub fn new(command: &str, parameters: Map<String, Value>) -> Self {
        Self {
            command: command.to_string(),
            parameters,
            results: Map::new(),
        }
    }

    pub fn with_results(mut self, results: Map<String, Value>) -> Self {
        self.results = results;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records hold only plain JSON values")
    }

    fn header(&self) -> Vec<String> {
        std::iter::once("command".to_string())
            .chain(self.parameters.keys().cloned())
            .chain(self.results.keys().cloned())
            .collect()
    }

    fn row(&self) -> Vec<String> {
        std::iter::once(self.command.clone())
            .chain(self.parameters.values().map(cell))
            .chain(self.results.values().map(cell))
            .collect()
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Small builder for ordered maps.
#[derive(Default)]
pub struct Fields(Map<String, Value>);

impl Fields {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), v.into());
        self
    }

    pub fn build(self) -> Map<String, Value> {
        self.0
    }
}

/// Writes all records; CSV gets a single header taken from the first record.
pub fn emit(records: &[OutputRecord], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json_line())?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if let Some(first) = records.first() {
                w.write_record(first.header())?;
            }
            for r in records {
                w.write_record(r.row())?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> OutputRecord {
        OutputRecord::new("pi", Fields::new().put("m", 0).put("k", 2).build()).with_results(
            Fields::new()
                .put("value", "0.318")
                .put("imag", Value::Null)
                .put("converged", true)
                .build(),
        )
    }

    #[test]
    fn json_round_trip() {
        let line = sample().to_json_line();
        let back: OutputRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back.to_json_line(), line);
        assert!(line.starts_with(r#"{"command":"pi","parameters":{"m":0,"k":2}"#));
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        emit(&[sample(), sample()], Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "command,m,k,value,imag,converged");
        assert_eq!(lines[1], "pi,0,2,0.318,,true");
        assert_eq!(lines.len(), 3);
    }
}
