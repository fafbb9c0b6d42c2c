use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Number, Value};

use kstep_core::IntPoly;

/// A JSON number carrying the exact decimal digits of `n`.
pub fn json_int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal is valid JSON"))
}

pub fn json_ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(json_int).collect())
}

/// Ascending coefficient array.
pub fn json_poly(p: &IntPoly) -> Value {
    json_ints(p.coeffs())
}

pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

pub fn markdown_table<S: AsRef<str>>(header: &[S], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    push_md_row(&mut out, header.iter().map(AsRef::as_ref));
    push_md_row(&mut out, header.iter().map(|_| "---"));
    for row in rows {
        push_md_row(&mut out, row.iter().map(String::as_str));
    }
    out
}

fn push_md_row<'a>(out: &mut String, cells: impl Iterator<Item = &'a str>) {
    out.push('|');
    for cell in cells {
        out.push(' ');
        out.push_str(cell);
        out.push_str(" |");
    }
    out.push('\n');
}

pub fn tsv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

pub fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}
