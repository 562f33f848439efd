//! Rendering of command results as plain text, JSON or CSV.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Plain => "plain",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(Format::Plain),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s}")),
        }
    }
}

/// A rendered result: the JSON value plus its plain-text and tabular forms.
pub struct Output {
    pub json: Value,
    pub plain: String,
    pub table: Table,
}

#[derive(Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    /// One row per record, one column per top-level field; nested values are
    /// written as compact JSON.
    pub fn from_records(records: &Value) -> Table {
        let items: Vec<&Value> = match records {
            Value::Array(a) => a.iter().collect(),
            v => vec![v],
        };
        let mut table = Table::default();
        for item in items {
            let Value::Object(map) = item else {
                table.header = vec!["value".into()];
                table.rows.push(vec![scalar(item)]);
                continue;
            };
            if table.header.is_empty() {
                table.header = map.keys().cloned().collect();
            }
            table.rows.push(table.header.iter().map(|k| map.get(k).map(scalar).unwrap_or_default()).collect());
        }
        table
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Output {
    /// Plain text is `key=value` pairs, one record per line.
    pub fn records<T: Serialize>(records: &[T]) -> Output {
        let json = serde_json::to_value(records).expect("records serialise");
        let table = Table::from_records(&json);
        let plain = table
            .rows
            .iter()
            .map(|row| {
                table
                    .header
                    .iter()
                    .zip(row)
                    .filter(|(_, v)| !v.is_empty())
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n");
        Output { json, plain, table }
    }

    pub fn single<T: Serialize>(record: &T, plain: String) -> Output {
        let json = serde_json::to_value(record).expect("record serialises");
        let table = Table::from_records(&json);
        Output { json, plain, table }
    }

    pub fn with_plain(mut self, plain: String) -> Output {
        self.plain = plain;
        self
    }

    pub fn with_table(mut self, table: Table) -> Output {
        self.table = table;
        self
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                writeln!(out)
            }
            Format::Plain => {
                if self.plain.is_empty() {
                    Ok(())
                } else {
                    writeln!(out, "{}", self.plain)
                }
            }
            Format::Csv => {
                let line = |cells: &[String]| cells.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",");
                writeln!(out, "{}", line(&self.table.header))?;
                for row in &self.table.rows {
                    writeln!(out, "{}", line(row))?;
                }
                Ok(())
            }
        }
    }
}
