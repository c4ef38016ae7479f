use serde_json::{Map, Value};

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if !s.contains('\n') => Some(s.clone()),
        _ => None,
    }
}

fn inline(items: &[Value]) -> Option<String> {
    let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
    parts.map(|p| format!("[{}]", p.join(", ")))
}

fn field(key: &str, v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    match v {
        Value::String(s) => {
            out.push_str(&format!("{pad}{key}: |\n"));
            for line in s.lines() {
                out.push_str(&format!("{pad}  {line}\n"));
            }
        }
        Value::Array(items) => {
            if let Some(s) = inline(items) {
                out.push_str(&format!("{pad}{key}: {s}\n"));
                return;
            }
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, item) in items.iter().enumerate() {
                match item {
                    Value::Array(row) if inline(row).is_some() => {
                        out.push_str(&format!("{pad}  {}\n", inline(row).unwrap()));
                    }
                    _ => field(&format!("[{i}]"), item, indent + 2, out),
                }
            }
        }
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            object(map, indent + 2, out);
        }
        _ => unreachable!(),
    }
}

fn object(map: &Map<String, Value>, indent: usize, out: &mut String) {
    for (k, v) in map {
        field(k, v, indent, out);
    }
}

/// Plain-text rendering of a report: one `key: value` line per field, in
/// document order, nesting by indentation.
pub fn to_text(report: &Map<String, Value>) -> String {
    let mut out = String::new();
    object(report, 0, &mut out);
    out
}

/// Pretty JSON with a trailing newline.
pub fn to_json(report: &Map<String, Value>) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_layout() {
        let v = json!({
            "status": "ok",
            "betti": [1, 2, 3],
            "module": "gens: [0]\nrelations: [[x]]\n",
            "rows": [["x", "0"], ["0", "y"]],
            "summands": [{"dim": 2}],
            "ideal": null
        });
        let text = to_text(v.as_object().unwrap());
        assert_eq!(
            text,
            "status: ok\nbetti: [1, 2, 3]\nmodule: |\n  gens: [0]\n  relations: [[x]]\nrows:\n  [x, 0]\n  [0, y]\nsummands:\n  [0]:\n    dim: 2\nideal: none\n"
        );
    }
}
