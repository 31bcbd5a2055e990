//! Records and the three output formats.

use std::fmt;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Int(u64),
    Text(String),
    Bool(bool),
    List(Vec<String>),
    Params(Vec<(String, u32)>),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Int(n) => write!(f, "{n}"),
            Field::Text(s) => f.write_str(s),
            Field::Bool(b) => write!(f, "{b}"),
            Field::List(items) => f.write_str(&items.join(",")),
            Field::Params(ps) => {
                let parts: Vec<String> = ps.iter().map(|(k, v)| format!("{k}={v}")).collect();
                f.write_str(&parts.join(" "))
            }
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Field::Int(n) => s.serialize_u64(*n),
            Field::Text(t) => s.serialize_str(t),
            Field::Bool(b) => s.serialize_bool(*b),
            Field::List(items) => {
                let mut seq = s.serialize_seq(Some(items.len()))?;
                for i in items {
                    seq.serialize_element(i)?;
                }
                seq.end()
            }
            Field::Params(ps) => {
                let mut map = s.serialize_map(Some(ps.len()))?;
                for (k, v) in ps {
                    map.serialize_entry(k, v)?;
                }
                map.end()
            }
        }
    }
}

impl From<u32> for Field {
    fn from(n: u32) -> Self {
        Field::Int(n.into())
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Text(s)
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Text(s.to_string())
    }
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

/// Ordered named fields. Serializes as a JSON object in insertion order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(Vec<(&'static str, Field)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &'static str, value: impl Into<Field>) -> Self {
        self.0.push((name, value.into()));
        self
    }

    pub fn with_opt(self, name: &'static str, value: Option<impl Into<Field>>) -> Self {
        match value {
            Some(v) => self.with(name, v),
            None => self,
        }
    }

    fn get(&self, name: &str) -> Option<&Field> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| v)
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Serialize)]
pub struct Output {
    pub command: &'static str,
    pub params: Record,
    pub records: Vec<Record>,
}

impl Output {
    /// Column names in order of first appearance across all records.
    fn columns(&self) -> Vec<&'static str> {
        let mut cols: Vec<&'static str> = Vec::new();
        for r in &self.records {
            for (k, _) in &r.0 {
                if !cols.contains(k) {
                    cols.push(k);
                }
            }
        }
        cols
    }

    fn rows(&self, cols: &[&str]) -> Vec<Vec<String>> {
        self.records
            .iter()
            .map(|r| {
                cols.iter()
                    .map(|c| r.get(c).map(ToString::to_string).unwrap_or_default())
                    .collect()
            })
            .collect()
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => {
                let cols = self.columns();
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&cols)?;
                for row in self.rows(&cols) {
                    w.write_record(&row)?;
                }
                w.flush()
            }
            Format::Table => {
                let cols = self.columns();
                let rows = self.rows(&cols);
                let widths: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .map(|(i, c)| rows.iter().map(|r| r[i].len()).fold(c.len(), usize::max))
                    .collect();
                let line = |cells: Vec<&str>| -> String {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(out, "{}", line(cols.clone()))?;
                for row in &rows {
                    writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Output {
        Output {
            command: "demo",
            params: Record::new().with("d", 2),
            records: vec![
                Record::new().with("n", 0).with("value", "1"),
                Record::new()
                    .with("n", 1)
                    .with("value", "-1/3")
                    .with("note", "x, y"),
            ],
        }
    }

    fn render(format: Format) -> String {
        let mut buf = Vec::new();
        sample().write(format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_has_union_header_and_quotes() {
        assert_eq!(render(Format::Csv), "n,value,note\n0,1,\n1,-1/3,\"x, y\"\n");
    }

    #[test]
    fn table_is_aligned() {
        assert_eq!(
            render(Format::Table),
            "n  value  note\n0  1\n1  -1/3   x, y\n"
        );
    }

    #[test]
    fn json_keeps_field_order() {
        let s = render(Format::Json);
        assert!(s.find("\"command\"").unwrap() < s.find("\"params\"").unwrap());
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["records"][1]["value"], "-1/3");
        assert_eq!(v["params"]["d"], 2);
    }
}
