use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Int(BigInt),
    /// A value with an absolute error bound.
    Real(f64, f64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl From<BigInt> for Cell {
    fn from(v: BigInt) -> Self {
        Cell::Int(v)
    }
}

impl From<&BigInt> for Cell {
    fn from(v: &BigInt) -> Self {
        Cell::Int(v.clone())
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v.into())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.into())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

/// Shortest round-trip digits; scientific outside `[1e-4, 1e15)`.
fn float_text(v: f64) -> String {
    if v == 0.0 || (v.is_finite() && (1e-4..1e15).contains(&v.abs())) {
        format!("{v}")
    } else if v.is_finite() {
        format!("{v:e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

fn float_json(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or_else(|| Value::String(float_text(v)), Value::Number)
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v, e) => format!("{},{}", float_text(*v), float_text(*e)),
            Cell::Float(v) => float_text(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::String(v.to_string()),
            Cell::Real(v, e) => serde_json::json!({ "value": float_json(*v), "err": float_json(*e) }),
            Cell::Float(v) => float_json(*v),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

/// One command's result: rows of cells under named columns.
#[derive(Debug, Clone)]
pub struct Table {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    format_version: u32,
    command: &'a str,
    parameters: &'a BTreeMap<String, String>,
    columns: &'a [String],
    rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            command: command.into(),
            parameters: BTreeMap::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }

    /// CSV carries rows only, one per line, so single-column output is a
    /// plain list and tables compare byte for byte.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = String::new();
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let record = JsonRecord {
                    format_version: FORMAT_VERSION,
                    command: &self.command,
                    parameters: &self.parameters,
                    columns: &self.columns,
                    rows: self.rows.iter().map(|r| r.iter().map(Cell::json).collect()).collect(),
                };
                let mut s = serde_json::to_string_pretty(&record).expect("plain data serialises");
                s.push('\n');
                s
            }
        }
    }
}
