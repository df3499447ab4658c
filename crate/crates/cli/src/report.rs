//! Deterministic report serialization. Key order is insertion order,
//! floats print with exactly six decimals (Rust's formatter rounds ties
//! to even), so identical inputs produce byte-identical output.

use std::fmt::Write as _;

#[derive(Debug, Clone)]
pub enum Value {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    List(Vec<Value>),
    Object(Vec<(String, Value)>),
}

impl Value {
    pub fn object() -> Value {
        Value::Object(Vec::new())
    }

    pub fn push(&mut self, key: &str, value: Value) -> &mut Value {
        match self {
            Value::Object(entries) => entries.push((key.to_string(), value)),
            _ => panic!("push on non-object value"),
        }
        self
    }

    pub fn strs<I: IntoIterator<Item = S>, S: Into<String>>(items: I) -> Value {
        Value::List(items.into_iter().map(|s| Value::Str(s.into())).collect())
    }

    pub fn floats<I: IntoIterator<Item = f64>>(items: I) -> Value {
        Value::List(items.into_iter().map(Value::Float).collect())
    }
}

pub fn complex_value(re: f64, im: f64) -> Value {
    let mut v = Value::object();
    v.push("re", Value::Float(re));
    v.push("im", Value::Float(im));
    v
}

fn fmt_float(x: f64) -> String {
    // -0.000000 and 0.000000 must not depend on the sign of a zero result.
    let rendered = format!("{:.6}", x);
    if rendered == "-0.000000" {
        "0.000000".to_string()
    } else {
        rendered
    }
}

fn escape_json(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

pub fn to_json(v: &Value) -> String {
    let mut out = String::new();
    write_json(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_json(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => {
            let _ = write!(out, "{b}");
        }
        Value::Int(i) => {
            let _ = write!(out, "{i}");
        }
        Value::Float(x) => out.push_str(&fmt_float(*x)),
        Value::Str(s) => {
            let _ = write!(out, "\"{}\"", escape_json(s));
        }
        Value::List(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            let scalar = items
                .iter()
                .all(|i| !matches!(i, Value::List(_) | Value::Object(_)));
            if scalar {
                out.push('[');
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    write_json(item, indent, out);
                }
                out.push(']');
            } else {
                out.push_str("[\n");
                for (k, item) in items.iter().enumerate() {
                    let _ = write!(out, "{pad}  ");
                    write_json(item, indent + 1, out);
                    if k + 1 < items.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                let _ = write!(out, "{pad}]");
            }
        }
        Value::Object(entries) => {
            if entries.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (k, (key, val)) in entries.iter().enumerate() {
                let _ = write!(out, "{pad}  \"{}\": ", escape_json(key));
                write_json(val, indent + 1, out);
                if k + 1 < entries.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            let _ = write!(out, "{pad}}}");
        }
    }
}

/// TSV rendering: one `path<TAB>value` line per scalar, with nested keys
/// joined by dots and list indices used as keys. Lists of flat objects
/// with identical keys (e.g. a per-round series) render as tab-separated
/// rows under a `#`-prefixed column header.
pub fn to_tsv(v: &Value) -> String {
    let mut out = String::new();
    flatten_tsv(v, String::new(), &mut out);
    out
}

fn scalar_tsv(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Int(i) => Some(i.to_string()),
        Value::Float(x) => Some(fmt_float(*x)),
        Value::Str(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten_tsv(v: &Value, prefix: String, out: &mut String) {
    match v {
        Value::List(items) => {
            // Uniform table of flat objects -> columnar rows.
            let as_table: Option<Vec<&Vec<(String, Value)>>> = items
                .iter()
                .map(|i| match i {
                    Value::Object(entries)
                        if entries.iter().all(|(_, val)| scalar_tsv(val).is_some()) =>
                    {
                        Some(entries)
                    }
                    _ => None,
                })
                .collect();
            if let Some(rows) = as_table {
                if !rows.is_empty()
                    && rows.iter().all(|r| {
                        r.len() == rows[0].len()
                            && r.iter().zip(rows[0]).all(|((a, _), (b, _))| a == b)
                    })
                {
                    let header: Vec<&str> = rows[0].iter().map(|(k, _)| k.as_str()).collect();
                    let _ = writeln!(out, "# {}\t{}", prefix, header.join("\t"));
                    for row in rows {
                        let cells: Vec<String> =
                            row.iter().map(|(_, val)| scalar_tsv(val).unwrap()).collect();
                        let _ = writeln!(out, "{}", cells.join("\t"));
                    }
                    return;
                }
            }
            for (i, item) in items.iter().enumerate() {
                flatten_tsv(item, format!("{prefix}.{i}"), out);
            }
            if items.is_empty() {
                let _ = writeln!(out, "{prefix}\t");
            }
        }
        Value::Object(entries) => {
            for (key, val) in entries {
                let path = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                flatten_tsv(val, path, out);
            }
        }
        scalar => {
            let _ = writeln!(out, "{prefix}\t{}", scalar_tsv(scalar).unwrap());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_six_decimals_and_ties_round_to_even() {
        assert_eq!(fmt_float(0.3), "0.300000");
        assert_eq!(fmt_float(-0.0), "0.000000");
        // 0.0000015 is not exactly representable; use binary ties.
        assert_eq!(format!("{:.1}", 0.25), "0.2");
        assert_eq!(format!("{:.1}", 0.75), "0.8");
    }

    #[test]
    fn json_is_deterministic_and_ordered() {
        let mut v = Value::object();
        v.push("b", Value::Int(1));
        v.push("a", Value::Float(0.5));
        let first = to_json(&v);
        assert_eq!(first, to_json(&v));
        let b_pos = first.find("\"b\"").unwrap();
        let a_pos = first.find("\"a\"").unwrap();
        assert!(b_pos < a_pos, "insertion order must be preserved");
    }

    #[test]
    fn tsv_renders_series_as_rows() {
        let mut row1 = Value::object();
        row1.push("round", Value::Int(1));
        row1.push("spec_r", Value::Float(0.25));
        let mut row2 = Value::object();
        row2.push("round", Value::Int(2));
        row2.push("spec_r", Value::Float(0.5));
        let mut v = Value::object();
        v.push("series", Value::List(vec![row1, row2]));
        let tsv = to_tsv(&v);
        assert!(tsv.contains("# series\tround\tspec_r\n"));
        assert!(tsv.contains("1\t0.250000\n"));
        assert!(tsv.contains("2\t0.500000\n"));
    }

    #[test]
    fn json_strings_are_escaped() {
        let v = Value::Str("a\"b\\c\nd".into());
        assert_eq!(to_json(&v), "\"a\\\"b\\\\c\\nd\"\n");
    }
}
