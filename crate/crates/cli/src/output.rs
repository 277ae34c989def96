//! Rendering helpers. Text uses 4 decimals; JSON and CSV print the shortest
//! decimal that round-trips.

use clap::ValueEnum;
use pcmtie::{Ranking, SquareMatrix, Tolerances};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Labels<'a>(pub Option<&'a [String]>);

impl Labels<'_> {
    pub fn get(&self, k: usize) -> String {
        match self.0 {
            Some(names) => names[k].clone(),
            None => (k + 1).to_string(),
        }
    }
}

pub fn num(v: f64) -> String {
    // normalize negative zero so text tables stay tidy
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.4}")
}

pub fn full(v: f64) -> String {
    format!("{v}")
}

pub fn matrix_text(m: &SquareMatrix, labels: &Labels) -> String {
    let n = m.dim();
    let cells: Vec<Vec<String>> = (0..n)
        .map(|r| (0..n).map(|c| num(m.get(r, c))).collect())
        .collect();
    let head: Vec<String> = (0..n).map(|k| labels.get(k)).collect();
    let width = cells
        .iter()
        .flatten()
        .chain(&head)
        .map(String::len)
        .max()
        .unwrap_or(1);
    let label_width = head.iter().map(String::len).max().unwrap_or(1);
    let mut out = format!("{:label_width$} ", "");
    for h in &head {
        out.push_str(&format!(" {h:>width$}"));
    }
    out.push('\n');
    for (r, row) in cells.iter().enumerate() {
        out.push_str(&format!("{:>label_width$} ", head[r]));
        for c in row {
            out.push_str(&format!(" {c:>width$}"));
        }
        out.push('\n');
    }
    out
}

pub fn matrix_csv(m: &SquareMatrix, names: Option<&[String]>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(names) = names {
        w.write_record(names).expect("in-memory write");
    }
    for row in m.to_rows() {
        w.write_record(row.iter().map(|v| full(*v))).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

pub fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

pub fn ranking_text(r: &Ranking, labels: &Labels) -> String {
    r.groups()
        .iter()
        .map(|g| {
            let members: Vec<String> = g.iter().map(|&k| labels.get(k)).collect();
            if members.len() == 1 {
                members[0].clone()
            } else {
                format!("{{{}}}", members.join(", "))
            }
        })
        .collect::<Vec<_>>()
        .join(" > ")
}

/// Tie groups as 1-based index lists.
pub fn ranking_json(r: &Ranking) -> Value {
    json!(r
        .groups()
        .iter()
        .map(|g| g.iter().map(|k| k + 1).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn tolerances_json(tol: &Tolerances) -> Value {
    json!({
        "reciprocity": tol.reciprocity,
        "antisymmetry": tol.antisymmetry,
        "ranking_tie": tol.ranking_tie,
    })
}

pub fn tolerances_text(tol: &Tolerances) -> String {
    format!(
        "tolerances: reciprocity {:e}, antisymmetry {:e}, tie {:e}\n",
        tol.reciprocity, tol.antisymmetry, tol.ranking_tie
    )
}

pub fn vector_text(values: &[f64], labels: &Labels) -> String {
    values
        .iter()
        .enumerate()
        .map(|(k, v)| format!("  {:>4}  {:>10}\n", labels.get(k), num(*v)))
        .collect()
}
