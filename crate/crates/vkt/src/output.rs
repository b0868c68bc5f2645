//! Command results and their two renderings.
//!
//! Text output is one `key: value` line per field, with nested groups
//! flattened to dotted keys and multi-line values indented below their key.
//! A report holding a single plain field prints the bare value. JSON output
//! is an object with the same keys.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};
use vkt_core::{GaussCode, LaurentPoly, OrderedTwoComponentLink, VassilievValue};

use crate::json::{code_to_json, link_to_json, poly_to_json};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub enum Field {
    Code(GaussCode),
    Link(OrderedTwoComponentLink),
    Poly(LaurentPoly),
    Int(i64),
    Rational(VassilievValue),
    Bool(bool),
    Text(String),
    Ints(Vec<i64>),
    IntMap(Vec<(String, i64)>),
    TextMap(Vec<(String, String)>),
    Lines(Vec<String>),
    Group(Report),
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub fields: Vec<(String, Field)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, field: Field) -> &mut Self {
        self.fields.push((key.into(), field));
        self
    }

    pub fn with(mut self, key: impl Into<String>, field: Field) -> Self {
        self.push(key, field);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, f)| f)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let [(_, field)] = self.fields.as_slice() {
            match field {
                Field::Group(_) => {}
                Field::Lines(lines) => {
                    for l in lines {
                        out.push_str(l);
                        out.push('\n');
                    }
                    return out;
                }
                f => {
                    out.push_str(&f.inline_text());
                    out.push('\n');
                    return out;
                }
            }
        }
        self.write_text(&mut out, "");
        out
    }

    fn write_text(&self, out: &mut String, prefix: &str) {
        for (key, field) in &self.fields {
            match field {
                Field::Group(g) => g.write_text(out, &format!("{prefix}{key}.")),
                Field::Lines(lines) => {
                    let _ = writeln!(out, "{prefix}{key}:");
                    for l in lines {
                        let _ = writeln!(out, "  {l}");
                    }
                }
                f => {
                    let _ = writeln!(out, "{prefix}{key}: {}", f.inline_text());
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.fields.iter().map(|(k, f)| (k.clone(), f.to_json())).collect())
    }
}

impl Field {
    fn inline_text(&self) -> String {
        let pairs = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(" ");
        match self {
            Field::Code(c) => c.to_string(),
            Field::Link(l) => {
                let side = |es: &[vkt_core::GaussEntry]| es.iter().map(|e| e.to_string()).collect::<String>();
                format!("{} | {}", side(&l.first), side(&l.second))
            }
            Field::Poly(p) => p.to_string(),
            Field::Int(i) => i.to_string(),
            Field::Rational(r) => r.to_string(),
            Field::Bool(b) => b.to_string(),
            Field::Text(s) => s.clone(),
            Field::Ints(v) => pairs(&mut v.iter().map(|i| i.to_string())),
            Field::IntMap(m) => pairs(&mut m.iter().map(|(k, v)| format!("{k}={v}"))),
            Field::TextMap(m) => pairs(&mut m.iter().map(|(k, v)| format!("{k}={v}"))),
            Field::Lines(v) => v.join("; "),
            Field::Group(g) => g.to_text(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Field::Code(c) => code_to_json(c),
            Field::Link(l) => link_to_json(l),
            Field::Poly(p) => poly_to_json(p),
            Field::Int(i) => Value::from(*i),
            Field::Rational(r) => Value::String(r.to_string()),
            Field::Bool(b) => Value::Bool(*b),
            Field::Text(s) => Value::String(s.clone()),
            Field::Ints(v) => Value::from(v.clone()),
            Field::IntMap(m) => Value::Object(m.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect::<Map<_, _>>()),
            Field::TextMap(m) => {
                Value::Object(m.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<Map<_, _>>())
            }
            Field::Lines(v) => Value::from(v.clone()),
            Field::Group(g) => g.to_json(),
        }
    }
}
