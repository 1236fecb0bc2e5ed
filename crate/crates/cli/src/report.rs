use serde::Serialize;

use crate::args::Format;
use crate::error::CliError;

/// A finished command: its JSON document, the same content as a table, and
/// whether every claim it checked held.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: serde_json::Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub pass: bool,
}

impl Report {
    pub fn new<T: Serialize>(
        doc: &T,
        header: Vec<&'static str>,
        rows: Vec<Vec<String>>,
        pass: bool,
    ) -> Result<Report, CliError> {
        Ok(Report { json: serde_json::to_value(doc)?, header, rows, pass })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values always serialize");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut s = self.header.join("\t");
                s.push('\n');
                for row in &self.rows {
                    s.push_str(&row.join("\t"));
                    s.push('\n');
                }
                s
            }
        }
    }
}
