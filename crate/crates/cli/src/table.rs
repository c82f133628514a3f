//! Column data with a self-describing header, rendered as CSV or JSON.

use serde::Serialize;
use serde_json::{Map, Value};

/// Uniform output sampling xᵢ = i·l/n, i = 0..=n.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Sampling {
    pub l: f64,
    pub n: usize,
}

impl Sampling {
    pub fn points(self) -> impl Iterator<Item = f64> {
        (0..=self.n).map(move |i| i as f64 * self.l / self.n as f64)
    }

    fn describe(self) -> String {
        format!("0:{}:{}", num(self.l), self.n + 1)
    }
}

pub struct Table {
    pub case: String,
    pub eps1: f64,
    pub eps2: Option<f64>,
    pub sampling: Sampling,
    /// Extra `# key=value` lines in CSV, top-level fields in JSON.
    pub notes: Vec<(&'static str, Value)>,
    pub columns: Vec<String>,
    /// NaN marks a masked or undefined cell.
    pub rows: Vec<Vec<f64>>,
}

/// Shortest round-trip form, which never exceeds 17 significant digits.
pub fn num(v: f64) -> String {
    ryu::Buffer::new().format_finite(v).to_owned()
}

fn note_text(v: &Value) -> String {
    match v {
        Value::Number(n) => n.as_f64().map_or_else(|| n.to_string(), num),
        Value::Array(items) => items.iter().map(note_text).collect::<Vec<_>>().join(","),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Table {
    pub fn header_line(&self) -> String {
        format!(
            "# case={} eps1={} eps2={} grid={}",
            self.case,
            num(self.eps1),
            self.eps2.map_or_else(|| "none".to_owned(), num),
            self.sampling.describe()
        )
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header_line();
        out.push('\n');
        for (k, v) in &self.notes {
            out.push_str(&format!("# {k}={}\n", note_text(v)));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| if v.is_finite() { num(v) } else { String::new() }).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut doc = Map::new();
        doc.insert("case".into(), self.case.clone().into());
        doc.insert("eps1".into(), self.eps1.into());
        doc.insert("eps2".into(), self.eps2.into());
        doc.insert("grid".into(), serde_json::to_value(self.sampling).expect("plain struct"));
        for (k, v) in &self.notes {
            doc.insert((*k).into(), v.clone());
        }
        doc.insert("columns".into(), self.columns.clone().into());
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| if v.is_finite() { Value::from(v) } else { Value::Null }).collect())
            .collect();
        doc.insert("rows".into(), rows.into());
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("finite values only");
        s.push('\n');
        s
    }
}
