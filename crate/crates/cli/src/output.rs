//! Rendering of command results as aligned text, CSV or JSON.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Num(f64),
    /// Exact integer text, printed as is.
    Int(String),
    Missing,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    pub fn int(v: impl ToString) -> Cell {
        Cell::Int(v.to_string())
    }

    fn is_numeric(&self) -> bool {
        matches!(self, Cell::Num(_) | Cell::Int(_))
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Cell {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Cell {
        v.map_or(Cell::Missing, Cell::Num)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Table {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    /// One number. Plain text shows `value` followed by `suffix`.
    Scalar {
        key: String,
        value: Cell,
        suffix: String,
    },
    /// Named fields of a single result.
    Record(Vec<(String, Cell)>),
    Table(Table),
}

impl Output {
    pub fn scalar(key: &str, value: impl Into<Cell>, suffix: impl Into<String>) -> Output {
        Output::Scalar {
            key: key.to_string(),
            value: value.into(),
            suffix: suffix.into(),
        }
    }
}

pub struct Style {
    pub format: Format,
    pub digits: usize,
    pub color: bool,
}

/// Formats `v` to `digits` significant figures. Integer digits are never
/// dropped, so large values come out with no decimals at all.
pub fn format_number(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return format!("{:.*}", digits.saturating_sub(1), 0.0);
    }
    let magnitude = v.abs();
    if magnitude < 1e-4 {
        return format!("{:.*e}", digits.saturating_sub(1), v);
    }
    let exponent = magnitude.log10().floor() as i64;
    let mut decimals = (digits as i64 - 1 - exponent).max(0) as usize;
    let mut text = format!("{v:.decimals$}");
    // rounding can carry into a new leading digit (9.9996 -> 10.000)
    if decimals > 0 && significant_digits(&text) > digits {
        decimals -= 1;
        text = format!("{v:.decimals$}");
    }
    text
}

fn significant_digits(text: &str) -> usize {
    let digits: String = text.chars().filter(char::is_ascii_digit).collect();
    digits.trim_start_matches('0').len()
}

fn cell_text(cell: &Cell, digits: usize) -> String {
    match cell {
        Cell::Text(s) | Cell::Int(s) => s.clone(),
        Cell::Num(v) => format_number(*v, digits),
        Cell::Missing => String::new(),
    }
}

fn json_value(cell: &Cell, digits: usize) -> Value {
    match cell {
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Num(v) if !v.is_finite() => Value::Null,
        Cell::Num(_) | Cell::Int(_) => {
            let text = cell_text(cell, digits);
            text.parse::<Number>()
                .map(Value::Number)
                .unwrap_or(Value::String(text))
        }
        Cell::Missing => Value::Null,
    }
}

const GREEN: &str = "\x1b[32m";
const YELLOW: &str = "\x1b[33m";
const RED: &str = "\x1b[31m";
const RESET: &str = "\x1b[0m";

fn paint(text: &str, color: bool) -> String {
    if !color {
        return text.to_string();
    }
    let code = match text.trim() {
        "PASS" => GREEN,
        "PAPER-DISCREPANCY" => YELLOW,
        "FAIL" => RED,
        _ => return text.to_string(),
    };
    format!("{code}{text}{RESET}")
}

fn render_table(table: &Table, style: &Style) -> String {
    let cells: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|row| row.iter().map(|c| cell_text(c, style.digits)).collect())
        .collect();
    let widths: Vec<usize> = table
        .columns
        .iter()
        .enumerate()
        .map(|(i, name)| {
            cells
                .iter()
                .map(|row| row[i].chars().count())
                .chain([name.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let numeric: Vec<bool> = (0..table.columns.len())
        .map(|i| {
            let mut seen = table
                .rows
                .iter()
                .map(|r| &r[i])
                .filter(|c| **c != Cell::Missing);
            seen.clone().next().is_some() && seen.all(Cell::is_numeric)
        })
        .collect();

    let mut out = String::new();
    let line = |fields: Vec<String>, out: &mut String, paint_status: bool| {
        let mut parts = Vec::with_capacity(fields.len());
        for (i, field) in fields.iter().enumerate() {
            let padded = if numeric[i] {
                format!("{field:>w$}", w = widths[i])
            } else {
                format!("{field:<w$}", w = widths[i])
            };
            parts.push(if paint_status {
                paint(&padded, style.color)
            } else {
                padded
            });
        }
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(table.columns.clone(), &mut out, false);
    for row in cells {
        line(row, &mut out, true);
    }
    out
}

fn write_csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn render(output: &Output, style: &Style) -> String {
    let digits = style.digits;
    match (output, style.format) {
        (Output::Scalar { value, suffix, .. }, Format::Table) => {
            format!("{}{suffix}\n", cell_text(value, digits))
        }
        (Output::Scalar { key, value, suffix }, Format::Csv) => write_csv(
            &[key.clone(), "unit".to_string()],
            &[vec![cell_text(value, digits), suffix.trim().to_string()]],
        ),
        (Output::Scalar { key, value, suffix }, Format::Json) => {
            let mut obj = Map::new();
            obj.insert(key.clone(), json_value(value, digits));
            obj.insert("unit".to_string(), Value::String(suffix.trim().to_string()));
            json_text(Value::Object(obj))
        }
        (Output::Record(fields), Format::Table) => {
            let width = fields
                .iter()
                .map(|(k, _)| k.chars().count())
                .max()
                .unwrap_or(0);
            fields
                .iter()
                .map(|(k, v)| format!("{k:<width$}  {}\n", cell_text(v, digits)))
                .collect()
        }
        (Output::Record(fields), Format::Csv) => {
            let header: Vec<String> = fields.iter().map(|(k, _)| k.clone()).collect();
            let row: Vec<String> = fields.iter().map(|(_, v)| cell_text(v, digits)).collect();
            write_csv(&header, &[row])
        }
        (Output::Record(fields), Format::Json) => {
            let obj = fields
                .iter()
                .map(|(k, v)| (k.clone(), json_value(v, digits)))
                .collect();
            json_text(Value::Object(obj))
        }
        (Output::Table(table), Format::Table) => render_table(table, style),
        (Output::Table(table), Format::Csv) => {
            let rows: Vec<Vec<String>> = table
                .rows
                .iter()
                .map(|r| r.iter().map(|c| cell_text(c, digits)).collect())
                .collect();
            write_csv(&table.columns, &rows)
        }
        (Output::Table(table), Format::Json) => {
            let rows = table
                .rows
                .iter()
                .map(|row| {
                    let obj = table
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| (k.clone(), json_value(v, digits)))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            json_text(Value::Array(rows))
        }
    }
}

fn json_text(value: Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("values are serializable");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_figures() {
        assert_eq!(format_number(7.5198, 4), "7.520");
        assert_eq!(format_number(3.45327, 4), "3.453");
        assert_eq!(format_number(235_544.4, 4), "235544");
        assert_eq!(format_number(0.06970, 4), "0.06970");
        assert_eq!(format_number(-0.5, 3), "-0.500");
        assert_eq!(format_number(9.9996, 4), "10.00");
        assert_eq!(format_number(0.0, 4), "0.000");
        assert_eq!(format_number(1.5e-7, 2), "1.5e-7");
        assert_eq!(format_number(12.0, 1), "12");
    }

    #[test]
    fn scalar_forms() {
        let out = Output::scalar("rate", 3.4533, "% per decade");
        let style = |format| Style {
            format,
            digits: 4,
            color: false,
        };
        assert_eq!(render(&out, &style(Format::Table)), "3.453% per decade\n");
        assert_eq!(
            render(&out, &style(Format::Csv)),
            "rate,unit\n3.453,% per decade\n"
        );
        assert_eq!(
            render(&out, &style(Format::Json)),
            "{\n  \"rate\": 3.453,\n  \"unit\": \"% per decade\"\n}\n"
        );
    }

    #[test]
    fn aligned_table() {
        let mut t = Table::new(["name", "value"]);
        t.push(vec![Cell::text("a"), Cell::Num(1.0)]);
        t.push(vec![Cell::text("longer"), Cell::Num(22.5)]);
        let text = render(
            &Output::Table(t),
            &Style {
                format: Format::Table,
                digits: 3,
                color: false,
            },
        );
        assert_eq!(text, "name    value\na        1.00\nlonger   22.5\n");
    }
}
