use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use kstep_core::decimation::decimated_charpoly;
use kstep_core::prover::{
    build_matrix, certify_divisibility, identity_coefficients, p_poly, r_poly, verify_case_sums,
    CaseLabel, ProofMatrix, ProofTranscript,
};
use kstep_core::sequences::{
    check_identity, kbonacci, random_recurrence_instance, recurrence_coefficients,
};
use kstep_core::triangles::{TriangleP, TriangleQ};
use kstep_core::{IntPoly, Result};

use crate::render::{
    json_int, json_ints, json_line, json_poly, markdown_table, strings, tsv, verdict, yes_no,
};
use crate::{Format, TriangleKind};

/// Rendered output plus whether every check it reports passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn pass(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

pub fn triangle(kind: TriangleKind, rows: usize, format: Format) -> Outcome {
    let data: Vec<Vec<BigInt>> = match kind {
        TriangleKind::P => TriangleP::new(rows).rows().to_vec(),
        TriangleKind::Q => TriangleQ::new(rows).rows().to_vec(),
    };
    let text = match format {
        Format::Json => json_line(&Value::Array(data.iter().map(|r| json_ints(r)).collect())),
        Format::Tsv => tsv(&data.iter().map(|r| strings(r)).collect::<Vec<_>>()),
        Format::Markdown => {
            let mut header = vec!["row".to_string()];
            header.extend((0..=rows).map(|c| c.to_string()));
            let body: Vec<Vec<String>> = data
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut cells = vec![i.to_string()];
                    cells.extend(strings(r));
                    cells.resize(rows + 2, "0".to_string());
                    cells
                })
                .collect();
            markdown_table(&header, &body)
        }
    };
    Outcome::pass(text)
}

/// The chain of implications a passing certificate establishes, in order.
fn proof_steps(t: &ProofTranscript) -> Vec<(String, bool)> {
    let k = t.k;
    let cases_ok = t.per_case_results.values().all(|c| c.failed == 0);
    let divides = t.division_remainder.is_zero() && t.quotient == t.q_poly;
    vec![
        (
            "every column of M re-derived from its case argument (A-E)".to_string(),
            cases_ok && t.matrix_verified,
        ),
        (
            format!("column sums give (-r_{k})*q_{k} = -p_{k}(X^{k})"),
            t.product_verified,
        ),
        (
            format!("hence p_{k}(X^{k}) = r_{k}(X)*q_{k}(X) with q_{k} integral"),
            divides,
        ),
        (
            format!("r_{k}(X) divides p_{k}(X^{k}) (long-division remainder 0)"),
            t.division_remainder.is_zero(),
        ),
        (
            format!("the recurrence with characteristic polynomial p_{k}(X^{k}) annihilates every k-step sequence"),
            t.conclusion,
        ),
        (
            format!("F(n) = sum_{{i=1..{k}}} P[{k}][i] F(n-{k}i) for all n"),
            t.conclusion,
        ),
    ]
}

fn cases_summary(t: &ProofTranscript) -> Vec<(CaseLabel, usize, usize)> {
    t.per_case_results
        .iter()
        .map(|(c, tally)| (*c, tally.passed, tally.failed))
        .collect()
}

fn matrix_rows(m: &ProofMatrix, symbolic: bool, blank_zero: bool) -> Vec<Vec<String>> {
    let k = m.k;
    let mut out = Vec::with_capacity(m.rows() + 2);
    let mut case_row = vec!["Case".to_string()];
    case_row.extend(m.column_cases.iter().map(ToString::to_string));
    out.push(case_row);
    for r in 0..m.rows() {
        let mut row = vec![if r == k {
            format!("-X^{k}")
        } else {
            format!("X^{r}")
        }];
        for c in 0..m.columns() {
            let cell = match (&m.symbolic[r][c], symbolic) {
                (None, _) if blank_zero => String::new(),
                (None, _) => "0".to_string(),
                (Some(t), true) => t.to_string(),
                (Some(_), false) => m.entries[r][c].to_string(),
            };
            row.push(cell);
        }
        out.push(row);
    }
    let mut sum_row = vec!["SUM".to_string()];
    sum_row.extend(m.column_sums.iter().map(|s| {
        if blank_zero && s.sign() == num_bigint::Sign::NoSign {
            String::new()
        } else {
            s.to_string()
        }
    }));
    out.push(sum_row);
    out
}

pub fn prove(k: usize, show_matrix: bool, symbolic: bool, format: Format) -> Result<Outcome> {
    let t = certify_divisibility(k)?;
    let matrix = if show_matrix {
        Some(build_matrix(k)?)
    } else {
        None
    };
    let steps = proof_steps(&t);
    let text = match format {
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("k".into(), json!(k));
            obj.insert("r".into(), json_poly(&t.r_poly));
            obj.insert("p".into(), json_poly(&t.p_poly));
            obj.insert("p_decimated".into(), json_poly(&t.decimated));
            obj.insert("q".into(), json_poly(&t.q_poly));
            obj.insert("quotient".into(), json_poly(&t.quotient));
            obj.insert("remainder".into(), json_poly(&t.division_remainder));
            obj.insert("product_verified".into(), json!(t.product_verified));
            obj.insert("matrix_verified".into(), json!(t.matrix_verified));
            let cases: Map<String, Value> = cases_summary(&t)
                .into_iter()
                .map(|(c, p, f)| (c.to_string(), json!({ "passed": p, "failed": f })))
                .collect();
            obj.insert("cases".into(), Value::Object(cases));
            obj.insert(
                "steps".into(),
                Value::Array(
                    steps
                        .iter()
                        .map(|(s, ok)| json!({ "step": s, "ok": ok }))
                        .collect(),
                ),
            );
            if let Some(m) = &matrix {
                obj.insert(
                    "matrix".into(),
                    json!({
                        "cases": m.column_cases.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "rows": m.entries.iter().map(|r| json_ints(r)).collect::<Vec<_>>(),
                        "sums": json_ints(&m.column_sums),
                    }),
                );
            }
            obj.insert("verdict".into(), json!(verdict(t.conclusion)));
            json_line(&Value::Object(obj))
        }
        Format::Tsv => {
            let mut rows = vec![
                vec!["k".to_string(), k.to_string()],
                vec!["r".into(), t.r_poly.to_string()],
                vec!["p".into(), t.p_poly.to_string()],
                vec!["p_decimated".into(), t.decimated.to_string()],
                vec!["q".into(), t.q_poly.to_string()],
                vec!["quotient".into(), t.quotient.to_string()],
                vec!["remainder".into(), t.division_remainder.to_string()],
                vec!["product_verified".into(), yes_no(t.product_verified).into()],
                vec!["matrix_verified".into(), yes_no(t.matrix_verified).into()],
            ];
            for (c, p, f) in cases_summary(&t) {
                rows.push(vec![format!("case_{c}"), p.to_string(), f.to_string()]);
            }
            rows.push(vec!["verdict".into(), verdict(t.conclusion).into()]);
            let mut text = tsv(&rows);
            if let Some(m) = &matrix {
                text.push('\n');
                text.push_str(&tsv(&matrix_rows(m, symbolic, false)));
            }
            text
        }
        Format::Markdown => {
            let mut text = format!("## Divisibility certificate, k = {k}\n\n");
            let rows = vec![
                vec![format!("r_{k}(X)"), t.r_poly.to_string()],
                vec![format!("p_{k}(X)"), t.p_poly.to_string()],
                vec![format!("p_{k}(X^{k})"), t.decimated.to_string()],
                vec![format!("q_{k}(X)"), t.q_poly.to_string()],
                vec!["long-division quotient".into(), t.quotient.to_string()],
                vec!["long-division remainder".into(), t.division_remainder.to_string()],
            ];
            text.push_str(&markdown_table(&["item", "value"], &rows));
            text.push('\n');
            let case_rows: Vec<Vec<String>> = cases_summary(&t)
                .into_iter()
                .map(|(c, p, f)| vec![c.to_string(), p.to_string(), f.to_string()])
                .collect();
            text.push_str(&markdown_table(&["case", "columns passed", "failed"], &case_rows));
            text.push('\n');
            for (i, (s, ok)) in steps.iter().enumerate() {
                text.push_str(&format!("{}. [{}] {s}\n", i + 1, if *ok { "x" } else { " " }));
            }
            if let Some(m) = &matrix {
                text.push('\n');
                let all = matrix_rows(m, symbolic, true);
                let mut header = vec!["row \\ col".to_string()];
                header.extend((0..m.columns()).map(|c| format!("X^{c}")));
                text.push_str(&markdown_table(&header, &all));
            }
            text.push_str(&format!("\nverdict: {}\n", verdict(t.conclusion)));
            text
        }
    };
    Ok(Outcome {
        text,
        ok: t.conclusion,
    })
}

pub fn verify(
    k: usize,
    n_from: i64,
    n_to: i64,
    seed: Option<u64>,
    format: Format,
) -> Result<Outcome> {
    let rec = match seed {
        Some(s) => random_recurrence_instance(k, s)?,
        None => kbonacci(k)?,
    };
    let coeffs = identity_coefficients(k)?;
    let report = check_identity(&rec, &coeffs, k, n_from, n_to)?;
    let residues = report.by_residue(k);
    let ok = report.passed();
    let seeds_label = match seed {
        Some(s) => format!("random seeds (seed {s})"),
        None => "OEIS seeds".to_string(),
    };
    let text = match format {
        Format::Json => {
            let failure = match &report.first_failure {
                Some(c) => json!({ "n": c.n, "lhs": json_int(&c.lhs), "rhs": json_int(&c.rhs) }),
                None => Value::Null,
            };
            json_line(&json!({
                "k": k,
                "seed": seed,
                "initial": json_ints(rec.initial()),
                "n_from": n_from,
                "n_to": n_to,
                "coefficients": json_ints(&coeffs),
                "checked": report.checked(),
                "residues": residues.iter().enumerate().map(|(r, (c, h))| json!({
                    "residue": r, "checked": c, "held": h,
                })).collect::<Vec<_>>(),
                "first_failure": failure,
                "verdict": verdict(ok),
            }))
        }
        Format::Tsv => {
            let mut rows = vec![vec!["residue".into(), "checked".into(), "held".into()]];
            rows.extend(
                residues
                    .iter()
                    .enumerate()
                    .map(|(r, (c, h))| vec![r.to_string(), c.to_string(), h.to_string()]),
            );
            rows.push(vec![
                "verdict".into(),
                verdict(ok).into(),
                report.checked().to_string(),
            ]);
            tsv(&rows)
        }
        Format::Markdown => {
            let rows: Vec<Vec<String>> = residues
                .iter()
                .enumerate()
                .map(|(r, (c, h))| {
                    vec![
                        r.to_string(),
                        c.to_string(),
                        h.to_string(),
                        verdict(c == h).to_string(),
                    ]
                })
                .collect();
            let mut text = format!(
                "identity: F(n) = {}\n\n",
                identity_text(&coeffs, k)
            );
            text.push_str(&markdown_table(
                &["n mod k", "checked", "held", "status"],
                &rows,
            ));
            if let Some(c) = &report.first_failure {
                text.push_str(&format!(
                    "\nfirst failure at n = {}: lhs {} != rhs {}\n",
                    c.n, c.lhs, c.rhs
                ));
            }
            text.push_str(&format!(
                "\n{}, {} indices checked (k = {k}, n in [{n_from}, {n_to}], {seeds_label})\n",
                verdict(ok),
                report.checked()
            ));
            text
        }
    };
    Ok(Outcome { text, ok })
}

fn identity_text(coeffs: &[BigInt], stride: usize) -> String {
    let mut out = String::new();
    for (j, c) in coeffs.iter().enumerate() {
        let mag = c.magnitude();
        let sign = if c.sign() == num_bigint::Sign::Minus { "-" } else { "+" };
        if j == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if *mag != 1u32.into() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(&format!("F(n-{})", stride * (j + 1)));
    }
    out
}

pub fn decimate(charpoly: &IntPoly, stride: usize, format: Format) -> Result<Outcome> {
    let d = decimated_charpoly(charpoly, stride)?;
    let rec = recurrence_coefficients(&d)?;
    let text = match format {
        Format::Json => json_line(&json!({
            "charpoly": json_poly(charpoly),
            "stride": stride,
            "decimated": json_poly(&d),
            "recurrence": json_ints(&rec),
        })),
        Format::Tsv => {
            let mut rec_row = vec!["recurrence".to_string()];
            rec_row.extend(strings(&rec));
            tsv(&[vec!["charpoly".into(), d.to_string()], rec_row])
        }
        Format::Markdown => markdown_table(
            &["input", "stride", "decimated characteristic polynomial", "recurrence"],
            &[vec![
                charpoly.to_string(),
                stride.to_string(),
                d.to_string(),
                format!("[{}]", strings(&rec).join(", ")),
            ]],
        ),
    };
    Ok(Outcome::pass(text))
}

#[derive(Clone, Debug)]
struct SweepRow {
    k: usize,
    divisibility: bool,
    cases: bool,
    oracle: bool,
    numeric: bool,
}

impl SweepRow {
    fn ok(&self) -> bool {
        self.divisibility && self.cases && self.oracle && self.numeric
    }
}

fn sweep_one(k: usize) -> Result<SweepRow> {
    let t = certify_divisibility(k)?;
    let divisibility =
        t.division_remainder.is_zero() && t.quotient == t.q_poly && t.product_verified;
    let cases = verify_case_sums(k)?.passed() && t.matrix_verified;
    let oracle = decimated_charpoly(&r_poly(k)?, k)? == p_poly(k)?;
    let coeffs = identity_coefficients(k)?;
    let mut numeric = check_identity(&kbonacci(k)?, &coeffs, k, -20, 100)?.passed();
    for seed in 0..5 {
        let rec = random_recurrence_instance(k, seed)?;
        numeric &= check_identity(&rec, &coeffs, k, -20, 100)?.passed();
    }
    Ok(SweepRow {
        k,
        divisibility,
        cases,
        oracle,
        numeric,
    })
}

pub fn sweep(k_min: usize, k_max: usize, format: Format) -> Result<Outcome> {
    let rows: Vec<SweepRow> = (k_min..=k_max)
        .into_par_iter()
        .map(sweep_one)
        .collect::<Result<_>>()?;
    let ok = rows.iter().all(SweepRow::ok);
    let text = match format {
        Format::Json => json_line(&json!({
            "rows": rows.iter().map(|r| json!({
                "k": r.k,
                "divisibility": r.divisibility,
                "cases": r.cases,
                "oracle": r.oracle,
                "numeric": r.numeric,
            })).collect::<Vec<_>>(),
            "verdict": verdict(ok),
        })),
        Format::Tsv | Format::Markdown => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        verdict(r.divisibility).into(),
                        verdict(r.cases).into(),
                        verdict(r.oracle).into(),
                        verdict(r.numeric).into(),
                    ]
                })
                .collect();
            let header = ["k", "divisibility", "cases", "oracle", "numeric"];
            if format == Format::Tsv {
                let mut all = vec![header.iter().map(|s| s.to_string()).collect()];
                all.extend(body);
                tsv(&all)
            } else {
                let mut text = markdown_table(&header, &body);
                text.push_str(&format!("\nverdict: {}\n", verdict(ok)));
                text
            }
        }
    };
    Ok(Outcome { text, ok })
}
