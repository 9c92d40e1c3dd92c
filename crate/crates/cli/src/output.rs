//! Rendering of result tables as CSV, JSON or aligned text.
//!
//! Floats are written in fixed notation with 10 significant digits, or
//! rounded to 7 decimals for columns compared against printed values, so
//! identical runs produce identical bytes.

use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

use crate::args::Format;
use crate::error::{CliError, CliResult};

/// Fixed notation with 10 significant digits; `-0` prints as `0`.
pub fn fmt_sig10(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000".into();
    }
    let sci = format!("{x:.9e}");
    let exp: i32 = sci.rsplit_once('e').and_then(|(_, e)| e.parse().ok()).unwrap_or(0);
    let decimals = (9 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Rounded to the 7 decimals of the published tables.
pub fn fmt_printed(x: f64) -> String {
    let s = format!("{x:.7}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Bool(bool),
    Float(f64),
    Printed(f64),
    Empty,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Float(x) if x.is_finite() => fmt_sig10(*x),
            Cell::Printed(x) if x.is_finite() => fmt_printed(*x),
            Cell::Float(_) | Cell::Printed(_) | Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => Value::from(*i),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Float(x) | Cell::Printed(x) if x.is_finite() => {
                Value::Number(Number::from_str(&self.text()).expect("formatted float is a JSON number"))
            }
            Cell::Float(_) | Cell::Printed(_) | Cell::Empty => Value::Null,
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<u32> for Cell {
    fn from(x: u32) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map(Cell::Float).unwrap_or(Cell::Empty)
    }
}

/// One row: flat cells in header order plus nested JSON-only members.
#[derive(Debug, Clone, Default)]
pub struct Record {
    pub cells: Vec<Cell>,
    pub nested: Vec<(&'static str, Value)>,
}

impl Record {
    pub fn new(cells: Vec<Cell>) -> Self {
        Self { cells, nested: Vec::new() }
    }

    pub fn with_nested(mut self, key: &'static str, value: Value) -> Self {
        self.nested.push((key, value));
        self
    }
}

/// Builds a JSON object of formatted numbers.
pub fn json_object(fields: &[(&str, Cell)]) -> Value {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert((*k).to_string(), v.json());
    }
    Value::Object(map)
}

#[derive(Debug, Clone)]
pub struct Section {
    pub name: &'static str,
    pub headers: Vec<&'static str>,
    pub records: Vec<Record>,
}

impl Section {
    pub fn new(name: &'static str, headers: &[&'static str]) -> Self {
        Self { name, headers: headers.to_vec(), records: Vec::new() }
    }

    fn json(&self) -> Value {
        Value::Array(
            self.records
                .iter()
                .map(|r| {
                    let mut map = Map::new();
                    for (h, c) in self.headers.iter().zip(&r.cells) {
                        map.insert((*h).to_string(), c.json());
                    }
                    for (k, v) in &r.nested {
                        map.insert((*k).to_string(), v.clone());
                    }
                    Value::Object(map)
                })
                .collect(),
        )
    }
}

/// A rendered result: one or more sections.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub sections: Vec<Section>,
}

impl Document {
    pub fn single(section: Section) -> Self {
        Self { sections: vec![section] }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Json => self.json(),
            Format::Pretty => self.pretty(),
        }
    }

    fn csv(&self) -> String {
        let multi = self.sections.len() > 1;
        let mut out = String::new();
        for (i, section) in self.sections.iter().enumerate() {
            if multi {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&format!("# {}\n", section.name));
            }
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(&section.headers).expect("in-memory write");
            for r in &section.records {
                w.write_record(r.cells.iter().map(Cell::text)).expect("in-memory write");
            }
            out.push_str(&String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv"));
        }
        out
    }

    fn json(&self) -> String {
        let value = if self.sections.len() == 1 {
            self.sections[0].json()
        } else {
            let mut map = Map::new();
            for s in &self.sections {
                map.insert(s.name.to_string(), s.json());
            }
            Value::Object(map)
        };
        let mut s = serde_json::to_string_pretty(&value).expect("serializable");
        s.push('\n');
        s
    }

    fn pretty(&self) -> String {
        let mut out = String::new();
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            if self.sections.len() > 1 {
                out.push_str(&format!("== {} ==\n", section.name));
            }
            let rows: Vec<Vec<String>> =
                section.records.iter().map(|r| r.cells.iter().map(Cell::text).collect()).collect();
            let mut widths: Vec<usize> = section.headers.iter().map(|h| h.chars().count()).collect();
            for row in &rows {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |cells: Vec<String>| {
                let mut l = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ");
                l.push('\n');
                l
            };
            out.push_str(&line(section.headers.iter().map(|h| h.to_string()).collect()));
            for row in rows {
                out.push_str(&line(row));
            }
        }
        out
    }
}

/// Writes to `path`, or stdout when `None`.
pub fn emit(text: &str, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.to_path_buf(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}
