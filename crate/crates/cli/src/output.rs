//! Table rendering: CSV with a header row, and JSON objects with "params",
//! "rows", "residuals" keys. Rationals render losslessly ("p/q" text in
//! CSV, {"num": p, "den": q} in JSON); floats render with 17 significant
//! digits in CSV and as shortest-round-trip JSON numbers.

use dualhahn::scalar::Scalar;
use num_traits::One;
use serde_json::{Map, Number, Value};

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Rat(Scalar),
    Float(f64),
    Int(i64),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Rat(r) => rational_text(r),
            Cell::Float(x) => format!("{x:.16e}"),
            Cell::Int(k) => k.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Rat(r) => rational_json(r),
            Cell::Float(x) => Number::from_f64(*x)
                .map(Value::Number)
                .unwrap_or_else(|| Value::String(format!("{x}"))),
            Cell::Int(k) => Value::Number((*k).into()),
            Cell::Empty => Value::Null,
        }
    }
}

/// "p/q", or just "p" for integers — lossless and compact.
pub fn rational_text(r: &Scalar) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// {"num": p, "den": q} with arbitrary-precision integer components.
pub fn rational_json(r: &Scalar) -> Value {
    let big = |s: String| -> Value {
        s.parse::<Number>()
            .map(Value::Number)
            .unwrap_or(Value::String(s))
    };
    let mut obj = Map::new();
    obj.insert("num".into(), big(r.numer().to_string()));
    obj.insert("den".into(), big(r.denom().to_string()));
    Value::Object(obj)
}

/// A rectangular table with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "ragged table row");
        self.rows.push(row);
    }
}

/// Rendered command output: the table plus named parameters and residual
/// records for the JSON envelope.
#[derive(Debug, Clone)]
pub struct Report {
    pub params: Vec<(String, Cell)>,
    pub table: Table,
    pub residuals: Vec<(String, Cell)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.table.columns.join(","));
        out.push('\n');
        for row in &self.table.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn json(&self) -> String {
        let mut root = Map::new();
        let mut params = Map::new();
        for (k, v) in &self.params {
            params.insert(k.clone(), v.json());
        }
        root.insert("params".into(), Value::Object(params));
        let rows: Vec<Value> = self
            .table
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (col, cell) in self.table.columns.iter().zip(row) {
                    obj.insert(col.clone(), cell.json());
                }
                Value::Object(obj)
            })
            .collect();
        root.insert("rows".into(), Value::Array(rows));
        let residuals: Vec<Value> = self
            .residuals
            .iter()
            .map(|(name, cell)| {
                let mut obj = Map::new();
                obj.insert("check".into(), Value::String(name.clone()));
                obj.insert("value".into(), cell.json());
                Value::Object(obj)
            })
            .collect();
        root.insert("residuals".into(), Value::Array(residuals));
        let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("serialization");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dualhahn::scalar::{frac, int};

    #[test]
    fn rationals_render_losslessly() {
        assert_eq!(rational_text(&frac(7, 2)), "7/2");
        assert_eq!(rational_text(&int(-5)), "-5");
        assert_eq!(
            serde_json::to_string(&rational_json(&frac(-7, 2))).unwrap(),
            r#"{"num":-7,"den":2}"#
        );
    }

    #[test]
    fn big_rationals_survive_json() {
        use dualhahn::Field;
        let big = frac(1, 3).powi(40);
        let v = rational_json(&big);
        assert_eq!(v["den"].to_string(), big.denom().to_string());
    }

    #[test]
    fn csv_has_header_and_rows() {
        let mut t = Table::new(&["s", "y"]);
        t.push(vec![Cell::Int(0), Cell::Rat(int(-5))]);
        t.push(vec![Cell::Int(1), Cell::Rat(frac(1, 2))]);
        let r = Report {
            params: vec![],
            table: t,
            residuals: vec![],
        };
        assert_eq!(r.render(Format::Csv), "s,y\n0,-5\n1,1/2\n");
    }

    #[test]
    fn json_envelope_has_required_keys() {
        let mut t = Table::new(&["n"]);
        t.push(vec![Cell::Int(3)]);
        let r = Report {
            params: vec![("N".into(), Cell::Int(2))],
            table: t,
            residuals: vec![("mass".into(), Cell::Rat(int(0)))],
        };
        let v: serde_json::Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(v["params"]["N"], 2);
        assert_eq!(v["rows"][0]["n"], 3);
        assert_eq!(v["residuals"][0]["check"], "mass");
    }

    #[test]
    fn floats_render_with_seventeen_significant_digits() {
        let c = Cell::Float(0.1);
        assert_eq!(c.csv(), "1.0000000000000001e-1");
    }
}
