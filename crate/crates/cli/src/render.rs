//! Plain-text rendering of a payload. Every value shown is read from the
//! payload itself.

use serde_json::{Map, Value};

/// Table columns that come first, in this order; the rest follow sorted.
const COLUMN_ORDER: &[&str] = &[
    "name",
    "order",
    "index",
    "size",
    "representative",
    "cycle_type",
    "observed",
    "expected",
    "within_tolerance",
    "block_size",
    "blocks",
    "conjugates",
    "class_sizes",
    "h1",
    "h2",
    "generators",
];

const HEADER_KEYS: &[&str] = &["tool_version", "command", "inputs_echo"];

fn as_fraction(v: &Value) -> Option<String> {
    let o = v.as_object()?;
    if o.len() != 3 {
        return None;
    }
    let (num, den, dec) = (o.get("num")?, o.get("den")?, o.get("decimal")?.as_str()?);
    Some(format!("{num}/{den} \u{2248} {dec}"))
}

fn cell(v: &Value) -> String {
    if let Some(f) = as_fraction(v) {
        return f;
    }
    match v {
        Value::Null => "none".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| i.is_number()) => {
            let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(", "),
        Value::Object(o) => o
            .iter()
            .map(|(k, v)| format!("{k}={}", cell(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn is_table(v: &Value) -> bool {
    match v.as_array() {
        Some(items) => !items.is_empty() && items.iter().all(|i| i.is_object() && as_fraction(i).is_none()),
        None => false,
    }
}

fn columns(rows: &[Value]) -> Vec<String> {
    let mut keys: Vec<String> = Vec::new();
    for row in rows {
        for k in row.as_object().into_iter().flat_map(Map::keys) {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    let rank = |k: &str| COLUMN_ORDER.iter().position(|c| *c == k).unwrap_or(COLUMN_ORDER.len());
    keys.sort_by(|a, b| rank(a).cmp(&rank(b)).then_with(|| a.cmp(b)));
    keys
}

fn aligned(rows: &[Vec<String>], out: &mut String) {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let mut line = String::new();
        for (c, text) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(text);
            } else {
                line.push_str(text);
                line.push_str(&" ".repeat(widths[c] - text.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

fn table(key: &str, rows: &[Value], out: &mut String) {
    let cols = columns(rows);
    let mut grid = vec![cols.clone()];
    for row in rows {
        grid.push(cols.iter().map(|c| row.get(c).map(cell).unwrap_or_default()).collect());
    }
    out.push('\n');
    out.push_str(key);
    out.push_str(":\n");
    aligned(&grid, out);
}

/// Aligned key/value lines for scalar fields, then one table per list of
/// records.
pub fn render_table(payload: &Value) -> String {
    let mut out = String::new();
    let Some(fields) = payload.as_object() else {
        return cell(payload) + "\n";
    };
    if let Some(command) = fields.get("command").and_then(Value::as_str) {
        out.push_str(command);
        if let Some(v) = fields.get("tool_version").and_then(Value::as_str) {
            out.push_str(&format!(" (version {v})"));
        }
        out.push('\n');
    }
    if let Some(inputs) = fields.get("inputs_echo").and_then(Value::as_object) {
        let rows: Vec<Vec<String>> = inputs.iter().map(|(k, v)| vec![format!("  {k}"), cell(v)]).collect();
        aligned(&rows, &mut out);
    }
    let mut scalars: Vec<Vec<String>> = Vec::new();
    let mut tables: Vec<(&String, &Vec<Value>)> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    for (key, value) in fields.iter().filter(|(k, _)| !HEADER_KEYS.contains(&k.as_str())) {
        if is_table(value) {
            tables.push((key, value.as_array().unwrap()));
        } else if let Some(f) = as_fraction(value) {
            notes.push(format!("{key} {f}"));
        } else if key == "triples" && value.as_array().is_some_and(Vec::is_empty) {
            notes.push("no nontrivial Gassmann triples found".to_string());
        } else {
            scalars.push(vec![key.clone(), cell(value)]);
        }
    }
    if !scalars.is_empty() {
        out.push('\n');
        aligned(&scalars, &mut out);
    }
    for (key, rows) in tables {
        table(key, rows, &mut out);
    }
    if !notes.is_empty() {
        out.push('\n');
        for note in notes {
            out.push_str(&note);
            out.push('\n');
        }
    }
    out
}
