//! CSV and JSON table output.
//!
//! CSV is locale-independent: '.' decimal separator, '\n' row terminator,
//! header row always present, floats at 17 significant digits so values
//! round-trip exactly. JSON mirrors the CSV per record as an array of
//! objects (serde_json's shortest-round-trip float formatting).

use crate::CliResult;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// Full-precision float for CSV cells (17 significant digits).
pub fn fmt_full(x: f64) -> String {
    format!("{x:.16e}")
}

/// Fixed-notation value with `digits` significant digits, for human output.
pub fn fmt_sig(x: f64, digits: u32) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(u64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Float(x) => fmt_full(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Float(x) => serde_json::json!(x),
            Cell::Int(n) => serde_json::json!(n),
            Cell::Text(s) => serde_json::json!(s),
            Cell::Empty => serde_json::Value::Null,
        }
    }
}

/// A rectangular result table with a fixed header.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> CliResult<()> {
        writeln!(w, "{}", self.header.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> CliResult<()> {
        let records: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let map: serde_json::Map<String, serde_json::Value> = self
                    .header
                    .iter()
                    .zip(row)
                    .map(|(k, c)| (k.to_string(), c.json()))
                    .collect();
                serde_json::Value::Object(map)
            })
            .collect();
        let text = serde_json::to_string_pretty(&records)
            .map_err(|e| crate::CliError::Usage(format!("json output: {e}")))?;
        writeln!(w, "{text}")?;
        Ok(())
    }

    pub fn write_to(&self, path: &Path, format: OutputFormat) -> CliResult<()> {
        let file = std::fs::File::create(path)?;
        let mut buf = std::io::BufWriter::new(file);
        match format {
            OutputFormat::Csv => self.write_csv(&mut buf)?,
            OutputFormat::Json => self.write_json(&mut buf)?,
        }
        buf.flush()?;
        Ok(())
    }
}
