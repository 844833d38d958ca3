//! Result values and their JSON and CSV encodings.
//!
//! Every float passes through [`num`], which rounds to 12 significant digits
//! and maps `-0` to `0`, so identical computations print identical bytes.

use serde_json::{json, Value};
use tance::{Field, Matrix, Scalar, Vector};

/// Rounds to 12 significant digits; non-finite values become `null`.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        json!(0.0)
    } else {
        json!(rounded)
    }
}

/// A bare number over `R`, `[re, im]` over `C`.
pub fn scalar(z: Scalar, field: Field) -> Value {
    match field {
        Field::Real => num(z.re),
        Field::Complex => complex(z),
    }
}

pub fn complex(z: Scalar) -> Value {
    json!([num(z.re), num(z.im)])
}

pub fn vector(v: &Vector, field: Field) -> Value {
    Value::Array(v.iter().map(|&z| scalar(z, field)).collect())
}

/// Row-major nested arrays.
pub fn matrix(m: &Matrix, field: Field) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array((0..m.ncols()).map(|j| scalar(m[(i, j)], field)).collect()))
            .collect(),
    )
}

/// One line of compact JSON, or `key,value` rows with dotted key paths.
pub fn encode(value: &Value, csv: bool) -> String {
    if !csv {
        return format!("{value}\n");
    }
    let mut out = String::from("key,value\n");
    flatten("", value, &mut out);
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(prefix, k), v, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(prefix, &i.to_string()), v, out);
            }
        }
        Value::Null => out.push_str(&format!("{},\n", csv_field(prefix))),
        Value::String(s) => out.push_str(&format!("{},{}\n", csv_field(prefix), csv_field(s))),
        other => out.push_str(&format!("{},{}\n", csv_field(prefix), other)),
    }
}
