use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::cache::TOOL_VERSION;
use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &str, passed: bool) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail: None,
        }
    }

    pub fn with_detail(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail: Some(detail.into()),
        }
    }
}

/// Rows for the csv and table formats.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// What a command produced, before wall time and metadata are attached.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub input: Value,
    pub result: Value,
    pub checks: Vec<Check>,
    pub table: Table,
}

impl Outcome {
    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

#[derive(Serialize)]
pub struct Record<'a> {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub input: &'a Value,
    pub result: &'a Value,
    pub checks: &'a [Check],
    pub wall_time_ms: u64,
}

impl<'a> Record<'a> {
    pub fn new(command: &'a str, outcome: &'a Outcome, wall_time_ms: u64) -> Self {
        Record {
            schema: SCHEMA_VERSION,
            tool: "toricrep",
            version: TOOL_VERSION,
            command,
            input: &outcome.input,
            result: &outcome.result,
            checks: &outcome.checks,
            wall_time_ms,
        }
    }
}

pub fn emit(format: Format, record: &Record, table: &Table, out: &mut impl Write) -> CliResult<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, record)
                .map_err(|e| CliError::Output(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let csv_err = |e: csv::Error| CliError::Output(e.to_string());
            w.write_record(&table.header).map_err(csv_err)?;
            for row in &table.rows {
                w.write_record(row).map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Table => write_table(record, table, out)?,
    }
    Ok(())
}

fn write_table(record: &Record, table: &Table, out: &mut impl Write) -> std::io::Result<()> {
    let cols = table.header.len();
    let mut widths: Vec<usize> = table.header.iter().map(|h| h.chars().count()).collect();
    for row in &table.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = (0..cols)
            .map(|i| {
                let cell = cells.get(i).map_or("", String::as_str);
                format!("{cell:>width$}", width = widths[i])
            })
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(&table.header))?;
    writeln!(
        out,
        "{}",
        widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .join("  ")
    )?;
    for row in &table.rows {
        writeln!(out, "{}", line(row))?;
    }
    if !record.checks.is_empty() {
        writeln!(out)?;
        for c in record.checks {
            let status = if c.passed { "ok" } else { "FAILED" };
            match &c.detail {
                Some(d) => writeln!(out, "check {}: {status} ({d})", c.name)?,
                None => writeln!(out, "check {}: {status}", c.name)?,
            }
        }
    }
    writeln!(out, "wall time: {} ms", record.wall_time_ms)
}
