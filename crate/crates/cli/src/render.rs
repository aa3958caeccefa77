//! JSON encodings of library values and the three output formats.

use std::fmt::Write as _;

use nc_freecalc_core::measures::{Combination, LaurentInN, Limit};
use nc_freecalc_core::polynomials::{render_word, DiagonalPolynomial, ScalarPolynomial, TPoly};
use nc_freecalc_core::{Rational, SetPartition};
use serde_json::{json, Map, Value};

use crate::args::Format;

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rationals(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(rational).collect())
}

pub fn partition(p: &SetPartition) -> Value {
    json!(p.blocks())
}

pub fn combination(c: &Combination) -> Value {
    Value::Array(
        c.terms()
            .map(|(p, coeff)| json!({"partition": partition(p), "coefficient": rational(coeff)}))
            .collect(),
    )
}

pub fn laurent(l: &LaurentInN) -> Value {
    let map: Map<String, Value> = l.terms().map(|(e, c)| (e.to_string(), rational(c))).collect();
    Value::Object(map)
}

pub fn limit(l: &Limit) -> Value {
    match l {
        Limit::Finite(v) => rational(v),
        Limit::Divergent => Value::String("divergent".into()),
    }
}

pub fn tpoly(p: &TPoly) -> Value {
    Value::String(p.to_string())
}

pub fn diagonal_terms(p: &DiagonalPolynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|(w, c)| json!({"word": w, "coefficient": tpoly(c)}))
            .collect(),
    )
}

pub fn scalar_terms(p: &ScalarPolynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| json!({"power": k, "coefficient": tpoly(c)}))
            .collect(),
    )
}

/// A rendered command: NDJSON records plus optional format-specific views.
#[derive(Debug, Default)]
pub struct Report {
    pub records: Vec<Value>,
    pub table: Option<Table>,
    pub text: Option<String>,
}

#[derive(Debug)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn record(command: &str, inputs: Value, value: Value) -> Value {
    json!({"command": command, "inputs": inputs, "value": value, "exact": true})
}

impl Report {
    pub fn single(command: &str, inputs: Value, value: Value) -> Self {
        Report { records: vec![record(command, inputs, value)], ..Default::default() }
    }

    pub fn render(&self, format: Format) -> Result<String, csv::Error> {
        match format {
            Format::Json => {
                let mut out = String::new();
                for r in &self.records {
                    out.push_str(&r.to_string());
                    out.push('\n');
                }
                Ok(out)
            }
            Format::Csv => {
                let generic;
                let table = match &self.table {
                    Some(t) => t,
                    None => {
                        generic = self.generic_table();
                        &generic
                    }
                };
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&table.header)?;
                for row in &table.rows {
                    w.write_record(row)?;
                }
                let bytes = w.into_inner().map_err(|e| e.into_error())?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
            Format::Text => Ok(match &self.text {
                Some(t) => t.clone(),
                None => self.generic_text(),
            }),
        }
    }

    fn generic_table(&self) -> Table {
        let rows = self
            .records
            .iter()
            .map(|r| {
                ["command", "inputs", "value", "exact"]
                    .iter()
                    .map(|k| cell(&r[*k]))
                    .collect()
            })
            .collect();
        Table { header: ["command", "inputs", "value", "exact"].map(String::from).to_vec(), rows }
    }

    fn generic_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let value = &r["value"];
            match value {
                Value::Object(map) => {
                    let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
                    for (k, v) in map {
                        let _ = writeln!(out, "{k:<width$}  {}", cell(v));
                    }
                }
                other => {
                    let _ = writeln!(out, "{}", cell(other));
                }
            }
        }
        out
    }
}

/// Strings bare, everything else as compact JSON.
pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        "1".into()
    } else {
        render_word(word)
    }
}
