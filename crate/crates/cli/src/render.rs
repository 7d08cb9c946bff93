//! JSON is the payload; text and CSV are renderings of it.

use std::io::{self, Write};

use serde_json::Value;

use crate::config::Format;

pub struct Output {
    pub payload: Value,
    /// Header and rows, present when the payload has a per-item table.
    pub table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
    pub success: bool,
}

impl Output {
    pub fn plain(payload: Value) -> Self {
        Self { payload, table: None, success: true }
    }

    pub fn failing_unless(mut self, ok: bool) -> Self {
        self.success = ok;
        self
    }

    pub fn print(&self, format: Format) -> Result<(), String> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        let text = match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.payload).map_err(|e| e.to_string())?;
                s.push('\n');
                s
            }
            Format::Text => text(&self.payload),
            Format::Csv => {
                let (header, rows) = self
                    .table
                    .as_ref()
                    .ok_or("csv output is only available for per-tree tables and enumerations")?;
                csv_table(header, rows)?
            }
        };
        out.write_all(text.as_bytes()).map_err(|e| e.to_string())
    }
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| e.to_string())?;
    for row in rows {
        w.write_record(row).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("null".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        _ => None,
    }
}

/// `key: value` lines; scalar arrays joined by commas, anything deeper one
/// compact JSON value per line.
pub fn text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
                        let joined: Vec<String> = items.iter().filter_map(scalar).collect();
                        out.push_str(&format!("{k}: {}\n", joined.join(", ")));
                    }
                    Value::Array(items) => {
                        out.push_str(&format!("{k}:\n"));
                        for i in items {
                            out.push_str(&format!("  {i}\n"));
                        }
                    }
                    Value::Object(inner) => {
                        out.push_str(&format!("{k}:\n"));
                        for (ik, iv) in inner {
                            let shown = scalar(iv).unwrap_or_else(|| iv.to_string());
                            out.push_str(&format!("  {ik}: {shown}\n"));
                        }
                    }
                    _ => out.push_str(&format!("{k}: {}\n", scalar(val).unwrap_or_default())),
                }
            }
        }
        other => out.push_str(&format!("{}\n", scalar(other).unwrap_or_else(|| other.to_string()))),
    }
    out
}
