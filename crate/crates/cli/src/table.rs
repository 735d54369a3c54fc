//! Aligned plain-text rendering of JSON results.

use serde_json::{Map, Value};

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(match n.as_f64() {
            Some(f) if !n.is_i64() && !n.is_u64() => format!("{f:.4}"),
            _ => n.to_string(),
        }),
        Value::String(s) => Some(if s.is_empty() { "\"\"".into() } else { s.clone() }),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(a.iter().filter_map(scalar).collect::<Vec<_>>().join(" "))
        }
        Value::Array(a)
            if a.iter()
                .all(|x| matches!(x, Value::Array(p) if p.iter().all(|y| !y.is_array() && !y.is_object()))) =>
        {
            Some(
                a.iter()
                    .map(|x| format!("({})", scalar(x).unwrap_or_default().replace(' ', ",")))
                    .collect::<Vec<_>>()
                    .join(" "),
            )
        }
        _ => None,
    }
}

fn rows_table(rows: &[Value], indent: &str, out: &mut String) {
    let Some(Value::Object(first)) = rows.first() else {
        return;
    };
    let keys: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            keys.iter()
                .map(|k| r.get(k.as_str()).and_then(scalar).unwrap_or_else(|| "…".into()))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| {
            cells
                .iter()
                .map(|r| r[i].chars().count())
                .chain([k.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |vals: Vec<&str>| {
        let padded: Vec<String> = vals.iter().zip(&widths).map(|(v, w)| format!("{v:<w$}")).collect();
        format!("{indent}{}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(keys.iter().map(|k| k.as_str()).collect()));
    for r in &cells {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
}

fn object(map: &Map<String, Value>, indent: &str, out: &mut String) {
    let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
    for (k, v) in map {
        match (scalar(v), v) {
            (Some(s), _) => out.push_str(&format!("{indent}{k:<width$}  {s}\n")),
            (None, Value::Object(inner)) => {
                out.push_str(&format!("{indent}{k}:\n"));
                object(inner, &format!("{indent}  "), out);
            }
            (None, Value::Array(rows)) => {
                out.push_str(&format!("{indent}{k}:\n"));
                rows_table(rows, &format!("{indent}  "), out);
            }
            _ => unreachable!("scalars handled above"),
        }
    }
}

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => object(map, "", &mut out),
        Value::Array(rows) => rows_table(rows, "", &mut out),
        other => {
            out.push_str(&scalar(other).unwrap_or_default());
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn aligns_keys() {
        let s = render(&json!({ "count": 8, "types": ["00", "11"] }));
        assert_eq!(s, "count  8\ntypes  00 11\n");
    }

    #[test]
    fn tables_of_records() {
        let s = render(&json!({ "members": [{ "name": "A", "components": 1 }, { "name": "Long", "components": 12 }] }));
        assert!(s.contains("name  components"));
        assert!(s.contains("Long  12"));
    }
}
