//! Output records. Each record is written as one line of JSON with object
//! keys in sorted order, so identical runs produce identical bytes.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use severi_bn::elliptic::Point;

/// A named comparison; `pass` records whether it came out as required.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criterion {
    pub lhs: i64,
    pub name: String,
    pub pass: bool,
    pub rhs: i64,
}

// Fields are declared alphabetically: serde writes struct fields in
// declaration order, and maps are BTreeMaps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub command: String,
    pub criteria: Vec<Criterion>,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
}

impl Record {
    pub fn new(command: &str) -> Self {
        Record { command: command.to_string(), criteria: Vec::new(), inputs: BTreeMap::new(), outputs: BTreeMap::new() }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn output(mut self, key: &str, value: impl Serialize) -> Self {
        self.outputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn criterion(mut self, name: &str, lhs: i64, rhs: i64, pass: bool) -> Self {
        self.criteria.push(Criterion { lhs, name: name.to_string(), pass, rhs });
        self
    }

    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records hold plain data")
    }

    pub fn from_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("records hold plain data")
}

/// `"inf"` for the point at infinity, `[x, y]` otherwise.
pub fn point_value(p: &Point) -> Value {
    match p.coords() {
        None => Value::from("inf"),
        Some((x, y)) => Value::from(vec![x, y]),
    }
}

pub fn write_records(out: &mut dyn Write, records: &[Record]) -> io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_line())?;
    }
    Ok(())
}
