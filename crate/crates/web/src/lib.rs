//! wasm-bindgen exports for the browser demo.
//!
//! Every export returns a JSON string. Failures come back as
//! `{"error": "..."}` so the page has a single code path.

use std::str::FromStr;

use serde_json::{json, Number, Value};
use wasm_bindgen::prelude::*;

use kstep_core::decimation::decimated_charpoly;
use kstep_core::prover::{build_matrix, p_poly, q_poly, r_poly, verify_case_sums};
use kstep_core::sequences::recurrence_coefficients;
use kstep_core::triangles::{TriangleP, TriangleQ};
use kstep_core::{BigInt, IntPoly};

const MAX_ROWS: usize = 200;
const MAX_K: usize = 16;
const MAX_STRIDE: usize = 64;

fn int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn respond(r: Result<Value, String>) -> String {
    let v = r.unwrap_or_else(|e| json!({ "error": e }));
    serde_json::to_string(&v).expect("serializable")
}

/// Rows 0..=rows of triangle `p` or `q`.
#[wasm_bindgen]
pub fn triangle(kind: &str, rows: usize) -> String {
    respond(triangle_value(kind, rows))
}

fn triangle_value(kind: &str, rows: usize) -> Result<Value, String> {
    if rows > MAX_ROWS {
        return Err(format!("at most {MAX_ROWS} rows"));
    }
    let p = TriangleP::new(rows);
    let table = match kind {
        "p" | "P" => p.rows().to_vec(),
        "q" | "Q" => TriangleQ::from_p(&p).rows().to_vec(),
        other => return Err(format!("unknown triangle `{other}`")),
    };
    Ok(json!({ "rows": table.iter().map(|r| ints(r)).collect::<Vec<_>>() }))
}

/// The product matrix for `k` with numeric and symbolic cells, case
/// labels, column sums and per-case tallies.
#[wasm_bindgen]
pub fn prove_matrix(k: usize) -> String {
    respond(prove_value(k))
}

fn prove_value(k: usize) -> Result<Value, String> {
    if k > MAX_K {
        return Err(format!("k is limited to {MAX_K} in the browser"));
    }
    let m = build_matrix(k).map_err(|e| e.to_string())?;
    let report = verify_case_sums(k).map_err(|e| e.to_string())?;
    let r = r_poly(k).map_err(|e| e.to_string())?;
    let q = q_poly(k).map_err(|e| e.to_string())?;
    let p = p_poly(k).map_err(|e| e.to_string())?;
    let divides = &r * &q == p.compose_power(k);

    let symbolic: Vec<Vec<String>> = m
        .symbolic
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| cell.as_ref().map(ToString::to_string).unwrap_or_default())
                .collect()
        })
        .collect();
    let cases: Vec<Value> = report
        .per_case
        .iter()
        .map(|(label, t)| json!({ "case": label.to_string(), "passed": t.passed, "failed": t.failed }))
        .collect();
    Ok(json!({
        "k": k,
        "r": r.to_string(),
        "p": p.to_string(),
        "q": q.to_string(),
        "entries": m.entries.iter().map(|row| ints(row)).collect::<Vec<_>>(),
        "symbolic": symbolic,
        "column_cases": m.column_cases.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "column_sums": ints(&m.column_sums),
        "cases": cases,
        "verdict": if divides && report.passed() { "PASS" } else { "FAIL" },
    }))
}

/// `charpoly` holds comma-separated coefficients, highest degree first.
#[wasm_bindgen]
pub fn decimate(charpoly: &str, stride: usize) -> String {
    respond(decimate_value(charpoly, stride))
}

fn decimate_value(charpoly: &str, stride: usize) -> Result<Value, String> {
    if stride > MAX_STRIDE {
        return Err(format!("stride is limited to {MAX_STRIDE} in the browser"));
    }
    let coeffs = charpoly
        .split(',')
        .map(|s| BigInt::from_str(s.trim()).map_err(|_| format!("bad coefficient `{}`", s.trim())))
        .collect::<Result<Vec<_>, _>>()?;
    let poly = IntPoly::from_descending(&coeffs);
    if poly.degree().unwrap_or(0) > 12 {
        return Err("degree is limited to 12 in the browser".into());
    }
    let d = decimated_charpoly(&poly, stride).map_err(|e| e.to_string())?;
    let rec = recurrence_coefficients(&d).map_err(|e| e.to_string())?;
    Ok(json!({
        "charpoly": poly.to_string(),
        "stride": stride,
        "decimated": d.to_string(),
        "recurrence": ints(&rec),
    }))
}
