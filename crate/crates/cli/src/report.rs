//! JSON encodings of exact values: rationals as `"n"` or `"n/d"` strings,
//! polynomials in canonical text, matrices as row-major arrays.

use serde_json::{json, Value};
use veronese_core::io::{print_poly, print_rational};
use veronese_core::{Poly, RatMatrix, Rational};

pub fn rational(q: &Rational) -> Value {
    Value::String(print_rational(q))
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn poly(p: &Poly) -> Value {
    Value::String(print_poly(p))
}

pub fn matrix(m: &RatMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| rationals(r)).collect())
}

pub fn points(ps: &[Vec<Rational>]) -> Value {
    Value::Array(ps.iter().map(|p| rationals(p)).collect())
}

/// Renders a report as indented `key: value` lines.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write_text(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| matches!(x, Value::String(_) | Value::Number(_) | Value::Bool(_))) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn write_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_text(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write_text(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

pub fn error(kind: &str, message: &str, extra: Option<Value>) -> Value {
    let mut v = json!({ "status": "error", "kind": kind, "message": message });
    if let (Some(Value::Object(e)), Value::Object(m)) = (extra, &mut v) {
        m.extend(e);
    }
    v
}
