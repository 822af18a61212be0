//! JSON fragments and the +/- table renderer.

use ja_core::{Agenda, JudgmentSet, Profile};
use serde_json::{json, Value};

pub fn set_json(agenda: &Agenda, j: &JudgmentSet) -> Value {
    let judgments: Vec<String> = agenda.formulas_of(j).iter().map(ToString::to_string).collect();
    json!({ "signs": j.signs(agenda.size()), "judgments": judgments })
}

pub fn sets_json(agenda: &Agenda, sets: &[JudgmentSet]) -> Value {
    Value::Array(sets.iter().map(|j| set_json(agenda, j)).collect())
}

fn sign(s: i8) -> &'static str {
    match s {
        1 => "+",
        -1 => "-",
        _ => ".",
    }
}

/// Rows of signs under the agenda's issues, one column per issue.
pub struct Table {
    header: Vec<String>,
    rows: Vec<(String, Vec<i8>)>,
}

impl Table {
    pub fn new(agenda: &Agenda) -> Self {
        Table { header: agenda.pre_agenda().iter().map(ToString::to_string).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, label: impl Into<String>, signs: Vec<i8>) -> &mut Self {
        self.rows.push((label.into(), signs));
        self
    }

    pub fn set(&mut self, label: impl Into<String>, agenda: &Agenda, j: &JudgmentSet) -> &mut Self {
        self.row(label, j.signs(agenda.size()))
    }

    /// Agents grouped into runs of identical sets, labelled by position.
    pub fn profile(&mut self, p: &Profile) -> &mut Self {
        let agents = p.agents();
        let mut start = 0;
        while start < agents.len() {
            let end = (start..agents.len()).find(|&k| agents[k] != agents[start]).unwrap_or(agents.len());
            let label =
                if end - start == 1 { format!("agent {}", start + 1) } else { format!("agents {}-{}", start + 1, end) };
            self.set(label, p.agenda(), &agents[start]);
            start = end;
        }
        self
    }

    pub fn render(&self) -> String {
        let label_w = self.rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
        let widths: Vec<usize> = self.header.iter().map(|h| h.chars().count().max(1)).collect();
        let mut out = format!("{:label_w$}", "");
        for (h, w) in self.header.iter().zip(&widths) {
            out.push_str(&format!("  {h:^w$}"));
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        for (label, signs) in &self.rows {
            out.push_str(&format!("{label:label_w$}"));
            for (s, w) in signs.iter().zip(&widths) {
                out.push_str(&format!("  {:^w$}", sign(*s)));
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        out
    }
}

/// Plain `key: value` lines.
pub fn lines(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

/// Indented JSON with arrays of scalars kept on one line.
pub fn to_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth + 1);
    let close = "  ".repeat(depth);
    match v {
        Value::Array(xs) if xs.is_empty() => out.push_str("[]"),
        Value::Array(xs) if xs.iter().all(is_scalar) => {
            let items: Vec<String> = xs.iter().map(Value::to_string).collect();
            out.push_str(&format!("[{}]", items.join(", ")));
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad);
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&format!("{pad}{}: ", Value::String(k.clone())));
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
