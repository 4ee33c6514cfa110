//! JSON, CSV and text rendering of reports.
//!
//! Every report is a serde value. CSV and text are derived from the JSON
//! form by flattening: nested objects become dotted column names, arrays
//! are joined with `;`, and `null` becomes an empty cell. CSV columns
//! therefore always mirror the JSON field names.

use serde::Serialize;
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

/// `(column, cell)` pairs of one record, in field order.
pub fn flatten(value: &Value) -> Vec<(String, String)> {
    fn go(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
        match value {
            Value::Object(map) => {
                for (key, v) in map {
                    let name = if prefix.is_empty() {
                        key.clone()
                    } else {
                        format!("{prefix}.{key}")
                    };
                    go(&name, v, out);
                }
            }
            Value::Array(items) if items.iter().any(Value::is_object) => {
                // lists of records (counterexamples) stay readable as JSON
                out.push((prefix.to_string(), Value::Array(items.clone()).to_string()));
            }
            other => out.push((prefix.to_string(), scalar(other))),
        }
    }
    let mut out = Vec::new();
    go("", value, &mut out);
    out
}

fn records(value: &Value) -> Vec<&Value> {
    match value {
        Value::Array(items) => items.iter().collect(),
        other => vec![other],
    }
}

/// Renders a report. A top-level array is a table with one row per item.
pub fn render<T: Serialize>(report: &T, format: Format) -> Result<String, CliError> {
    let value = serde_json::to_value(report).map_err(|e| CliError::Output(e.to_string()))?;
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).map_err(|e| CliError::Output(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let rows: Vec<Vec<(String, String)>> = records(&value).into_iter().map(flatten).collect();
            let header: Vec<String> = rows
                .first()
                .map(|r| r.iter().map(|(c, _)| c.clone()).collect())
                .unwrap_or_default();
            csv_table(
                &header,
                rows.iter().map(|r| r.iter().map(|(_, v)| v.clone()).collect()),
            )
        }
        Format::Text => {
            let mut out = String::new();
            for (i, record) in records(&value).into_iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let fields = flatten(record);
                let width = fields.iter().map(|(c, _)| c.len()).max().unwrap_or(0);
                for (column, cell) in fields {
                    out.push_str(&format!("{column:<width$}  {cell}\n"));
                }
            }
            Ok(out)
        }
    }
}

/// A CSV document with a header row (always written, even with no rows).
pub fn csv_table<I>(header: &[String], rows: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut writer = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Output(e.to_string());
    writer.write_record(header).map_err(io)?;
    for row in rows {
        writer.write_record(&row).map_err(io)?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}
