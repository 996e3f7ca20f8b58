//! Aligned text rendering of `bn table` for `--pretty`.

use serde_json::Value;

use crate::record::Record;

const COLUMNS: [&str; 6] = ["p", "r", "d", "rho", "status", "dim"];

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => "-".to_string(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

pub fn render(records: &[Record]) -> String {
    let rows: Vec<[String; 6]> = records
        .iter()
        .map(|r| {
            [
                cell(r.inputs.get("p")),
                cell(r.inputs.get("r")),
                cell(r.inputs.get("d")),
                cell(r.outputs.get("rho")),
                cell(r.outputs.get("status")),
                cell(r.outputs.get("expected_dim")),
            ]
        })
        .collect();
    let mut widths = COLUMNS.map(str::len);
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[&str]| {
        let padded: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&COLUMNS);
    for row in &rows {
        out += &line(&row.iter().map(String::as_str).collect::<Vec<_>>());
    }
    out
}
