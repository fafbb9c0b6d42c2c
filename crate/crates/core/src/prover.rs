//! Certificate that `r_k(X)` divides `p_k(X^k)`.
//!
//! With `r_k(X) = X^k - X^(k-1) - ... - 1` and
//! `p_k(X) = X^k - sum_{i=1..k} P[k][i] X^(k-i)`, the stride-k identity holds
//! for every solution of the k-step recurrence exactly when `r_k(X)` divides
//! `p_k(X^k)`. The quotient `q_k` has an explicit description in terms of the
//! `P` and `Q` triangles; [`certify_divisibility`] checks it by long division
//! and by re-multiplication, and [`verify_case_sums`] re-derives every
//! coefficient of the long-hand product `(-r_k) q_k` column by column.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::triangles::{TriangleP, TriangleQ};

fn check_order(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::OrderTooSmall(k))
    } else {
        Ok(())
    }
}

/// `X^k - sum_{i=1..k} X^(k-i)`.
pub fn r_poly(k: usize) -> Result<IntPoly> {
    check_order(k)?;
    let mut coeffs = vec![-BigInt::one(); k + 1];
    coeffs[k] = BigInt::one();
    Ok(IntPoly::from_coeffs(coeffs))
}

/// `X^n - sum c_i X^(n-i)` for an identity with coefficients `c_1..c_n`.
pub fn characteristic_poly_of_identity(coeffs: &[BigInt]) -> Result<IntPoly> {
    if coeffs.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    let n = coeffs.len();
    let mut out = vec![BigInt::zero(); n + 1];
    out[n] = BigInt::one();
    for (i, c) in coeffs.iter().enumerate() {
        out[n - 1 - i] = -c;
    }
    Ok(IntPoly::from_coeffs(out))
}

/// `[P[k][1], ..., P[k][k]]`, the coefficients of the stride-k identity.
pub fn identity_coefficients(k: usize) -> Result<Vec<BigInt>> {
    check_order(k)?;
    let mut row = crate::triangles::p_row(k);
    row.remove(0);
    Ok(row)
}

pub fn p_poly(k: usize) -> Result<IntPoly> {
    characteristic_poly_of_identity(&identity_coefficients(k)?)
}

/// The quotient assembled block by block from triangle entries:
/// `X^(k(k-1)) + sum_{j=0..k-2} X^(kj) (-P[k-1][k-1-j] + sum_{i=k-1-j..k-1} Q[i][k-1-j] X^(k-i))`.
pub fn q_poly(k: usize) -> Result<IntPoly> {
    check_order(k)?;
    let p = TriangleP::new(k - 1);
    let q = TriangleQ::from_p(&p);
    let mut coeffs = vec![BigInt::zero(); k * (k - 1) + 1];
    coeffs[k * (k - 1)] = BigInt::one();
    for j in 0..=k - 2 {
        let col = (k - 1 - j) as i64;
        coeffs[k * j] -= p.get(k - 1, col);
        for i in (k - 1 - j)..=(k - 1) {
            coeffs[k * j + k - i] += q.get(i, col);
        }
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    A,
    B,
    C,
    D,
    E,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 5] = [
        CaseLabel::A,
        CaseLabel::B,
        CaseLabel::C,
        CaseLabel::D,
        CaseLabel::E,
    ];
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::A => "A",
            CaseLabel::B => "B",
            CaseLabel::C => "C",
            CaseLabel::D => "D",
            CaseLabel::E => "E",
        };
        f.write_str(s)
    }
}

/// Column `c = jk + m` of the product matrix, `0 <= m < k`.
pub fn classify_column(k: usize, c: usize) -> Result<CaseLabel> {
    check_order(k)?;
    if c > k * k {
        return Err(Error::ColumnOutOfRange {
            column: c,
            max: k * k,
        });
    }
    if c == 0 || c == k * k {
        return Ok(CaseLabel::A);
    }
    let (j, m) = (c / k, c % k);
    Ok(if j == k - 1 {
        CaseLabel::D
    } else if m == 0 {
        CaseLabel::C
    } else if m > j {
        CaseLabel::B
    } else {
        CaseLabel::E
    })
}

/// One symbolic cell of the product matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    One,
    P(usize, usize),
    Q(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedTerm {
    pub negative: bool,
    pub term: Term,
}

impl SignedTerm {
    fn pos(term: Term) -> Self {
        SignedTerm {
            negative: false,
            term,
        }
    }

    fn neg(term: Term) -> Self {
        SignedTerm {
            negative: true,
            term,
        }
    }

    fn flipped(self) -> Self {
        SignedTerm {
            negative: !self.negative,
            term: self.term,
        }
    }

    pub fn value(&self, p: &TriangleP, q: &TriangleQ) -> BigInt {
        let v = match self.term {
            Term::One => BigInt::one(),
            Term::P(i, j) => p.get(i, j as i64),
            Term::Q(i, j) => q.get(i, j as i64),
        };
        if self.negative {
            -v
        } else {
            v
        }
    }
}

impl fmt::Display for SignedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        match self.term {
            Term::One => f.write_str("1"),
            Term::P(i, j) => write!(f, "P{i},{j}"),
            Term::Q(i, j) => write!(f, "Q{i},{j}"),
        }
    }
}

/// The product `(-r_k) q_k` written out long hand.
///
/// Row `r < k` holds `X^r q_k(X)`, row `k` holds `-X^k q_k(X)`; column `c`
/// collects the contributions to `X^c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofMatrix {
    pub k: usize,
    /// `(k + 1)` rows of `k^2 + 1` entries.
    pub entries: Vec<Vec<BigInt>>,
    /// Triangle labels per cell, `None` where the entry is structurally empty.
    pub symbolic: Vec<Vec<Option<SignedTerm>>>,
    pub column_cases: Vec<CaseLabel>,
    pub column_sums: Vec<BigInt>,
}

impl ProofMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn columns(&self) -> usize {
        self.column_sums.len()
    }

    pub fn column(&self, c: usize) -> impl Iterator<Item = &BigInt> {
        self.entries.iter().map(move |row| &row[c])
    }

    /// Nonzero-labelled cells of column `c`, sorted.
    pub fn symbolic_column(&self, c: usize) -> Vec<SignedTerm> {
        let mut out: Vec<_> = self.symbolic.iter().filter_map(|row| row[c]).collect();
        out.sort();
        out
    }
}

/// Symbolic labels of `q_k`, one per exponent.
fn symbolic_quotient(k: usize) -> Vec<Option<SignedTerm>> {
    let mut cells = vec![None; k * (k - 1) + 1];
    cells[k * (k - 1)] = Some(SignedTerm::pos(Term::One));
    for j in 0..=k - 2 {
        let col = k - 1 - j;
        cells[k * j] = Some(SignedTerm::neg(Term::P(k - 1, col)));
        for i in col..=k - 1 {
            cells[k * j + k - i] = Some(SignedTerm::pos(Term::Q(i, col)));
        }
    }
    cells
}

pub fn build_matrix(k: usize) -> Result<ProofMatrix> {
    let quotient = q_poly(k)?;
    let labels = symbolic_quotient(k);
    let width = k * k + 1;
    let mut entries = vec![vec![BigInt::zero(); width]; k + 1];
    let mut symbolic = vec![vec![None; width]; k + 1];
    for r in 0..=k {
        let negate = r == k;
        for (e, label) in labels.iter().enumerate() {
            let coeff = quotient.coeff(e);
            entries[r][r + e] = if negate { -coeff } else { coeff };
            symbolic[r][r + e] = label.map(|t| if negate { t.flipped() } else { t });
        }
    }
    let column_sums = (0..width)
        .map(|c| entries.iter().map(|row| &row[c]).sum())
        .collect();
    let column_cases = (0..width)
        .map(|c| classify_column(k, c))
        .collect::<Result<_>>()?;
    Ok(ProofMatrix {
        k,
        entries,
        symbolic,
        column_cases,
        column_sums,
    })
}

/// How one column's sum was re-derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnCheck {
    pub column: usize,
    pub case: CaseLabel,
    /// Coefficient of `X^column` in `-p_k(X^k)`.
    pub target: BigInt,
    /// Plain sum of the numeric column.
    pub actual: BigInt,
    /// Value of the case's closed-form argument.
    pub closed_form: BigInt,
    /// Group sums making up the closed form (one entry except for case E).
    pub groups: Vec<BigInt>,
    /// The triangle entries the case argument says the column contains
    /// match the symbolic column exactly.
    pub terms_match: bool,
    pub passed: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub k: usize,
    pub columns: Vec<ColumnCheck>,
    pub per_case: BTreeMap<CaseLabel, Tally>,
}

impl CaseReport {
    pub fn failures(&self) -> usize {
        self.per_case.values().map(|t| t.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

/// Which triangle entries each case argument predicts in column `jk + m`,
/// together with the closed-form value of the column sum.
struct Prediction {
    terms: Vec<SignedTerm>,
    groups: Vec<BigInt>,
}

fn predict(k: usize, c: usize, p: &TriangleP) -> Prediction {
    use SignedTerm as S;
    use Term::{One, P, Q};
    let pv = |i: usize, j: usize| p.get(i, j as i64);
    let pow2 = |e: usize| BigInt::one() << e;
    let (j, m) = (c / k, c % k);

    match classify_column(k, c).expect("column in range") {
        CaseLabel::A if c == 0 => Prediction {
            terms: vec![S::neg(P(k - 1, k - 1))],
            groups: vec![-pv(k - 1, k - 1)],
        },
        CaseLabel::A => Prediction {
            terms: vec![S::neg(One)],
            groups: vec![-BigInt::one()],
        },
        CaseLabel::B => {
            // the whole row-0 block j slides down into this column; the Q
            // entries telescope to P[k-1][k-1-j]
            let col = k - 1 - j;
            let mut terms = vec![S::neg(P(k - 1, col))];
            terms.extend((col..=k - 1).map(|r| S::pos(Q(r, col))));
            Prediction {
                terms,
                groups: vec![-pv(k - 1, col) + pv(k - 1, col)],
            }
        }
        CaseLabel::C => {
            // Q entries of block j-1, the sign-flipped P of column (j-1)k,
            // and the new P of this block
            let col = k - j;
            let mut terms = vec![S::pos(P(k - 1, col)), S::neg(P(k - 1, col - 1))];
            terms.extend((col..=k - 1).map(|r| S::pos(Q(r, col))));
            Prediction {
                terms,
                groups: vec![BigInt::from(2) * pv(k - 1, col) - pv(k - 1, col - 1)],
            }
        }
        CaseLabel::D => {
            let mut terms = vec![S::pos(One)];
            terms.extend((1..=k - 1 - m).map(|r| S::pos(Q(r, 1))));
            let geometric: BigInt = (1..=k - 1 - m).map(|r| pow2(r - 1)).sum();
            let closed = if m == 0 {
                terms.push(S::pos(P(k - 1, 1)));
                BigInt::one() + geometric + (pow2(k - 1) - 1)
            } else {
                terms.push(S::neg(Q(k - m, 1)));
                BigInt::one() + geometric - pow2(k - m - 1)
            };
            Prediction {
                terms,
                groups: vec![closed],
            }
        }
        CaseLabel::E => {
            let mut terms = vec![S::neg(P(k - 1, k - 1 - j)), S::neg(Q(k - m, k - j))];
            terms.extend((k - m..=k - 1).map(|r| S::pos(Q(r, k - j - 1))));
            terms.extend((k - j..=k - 1 - m).map(|r| S::pos(Q(r, k - j))));
            let groups = vec![
                -pv(k - 1, k - 1 - j),
                -(pv(k - m, k - j) - pv(k - m - 1, k - j)),
                pv(k - 1, k - j - 1) - pv(k - m - 1, k - j - 1),
                pv(k - m - 1, k - j),
            ];
            Prediction { terms, groups }
        }
    }
}

/// Re-derives every column sum of the product matrix from its case argument
/// and compares it with both the numeric column and `-p_k(X^k)`.
pub fn verify_case_sums(k: usize) -> Result<CaseReport> {
    let matrix = build_matrix(k)?;
    let target = -p_poly(k)?.compose_power(k);
    let p = TriangleP::new(k);
    let mut per_case: BTreeMap<CaseLabel, Tally> =
        CaseLabel::ALL.iter().map(|&c| (c, Tally::default())).collect();
    let mut columns = Vec::with_capacity(matrix.columns());
    for c in 0..matrix.columns() {
        let case = matrix.column_cases[c];
        let mut prediction = predict(k, c, &p);
        prediction.terms.sort();
        let closed_form: BigInt = prediction.groups.iter().sum();
        let terms_match = prediction.terms == matrix.symbolic_column(c);
        let target_c = target.coeff(c);
        let actual = matrix.column_sums[c].clone();
        let passed = terms_match && closed_form == target_c && actual == target_c;
        let tally = per_case.get_mut(&case).expect("all labels present");
        if passed {
            tally.passed += 1;
        } else {
            tally.failed += 1;
        }
        columns.push(ColumnCheck {
            column: c,
            case,
            target: target_c,
            actual,
            closed_form,
            groups: prediction.groups,
            terms_match,
            passed,
        });
    }
    Ok(CaseReport {
        k,
        columns,
        per_case,
    })
}

/// Every cell's triangle label evaluates to the numeric entry, and unlabelled
/// cells are zero.
pub fn symbolic_matches_numeric(matrix: &ProofMatrix) -> bool {
    let p = TriangleP::new(matrix.k);
    let q = TriangleQ::from_p(&p);
    matrix
        .entries
        .iter()
        .zip(&matrix.symbolic)
        .all(|(nums, labels)| {
            nums.iter().zip(labels).all(|(n, label)| match label {
                Some(t) => t.value(&p, &q) == *n,
                None => n.is_zero(),
            })
        })
}

/// Record of the divisibility certificate for one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTranscript {
    pub k: usize,
    pub r_poly: IntPoly,
    pub p_poly: IntPoly,
    /// `p_k(X^k)`.
    pub decimated: IntPoly,
    pub q_poly: IntPoly,
    pub quotient: IntPoly,
    pub division_remainder: IntPoly,
    /// `(-r_k) q_k == -p_k(X^k)`.
    pub product_verified: bool,
    pub matrix_verified: bool,
    pub per_case_results: BTreeMap<CaseLabel, Tally>,
    pub conclusion: bool,
}

pub fn certify_divisibility(k: usize) -> Result<ProofTranscript> {
    let r = r_poly(k)?;
    let pk = p_poly(k)?;
    let decimated = pk.compose_power(k);
    let q = q_poly(k)?;
    let (quotient, division_remainder) = decimated.divrem(&r)?;
    let product_verified = &(-&r) * &q == -&decimated;

    let matrix = build_matrix(k)?;
    let cases = verify_case_sums(k)?;
    let sums_match = matrix
        .column_sums
        .iter()
        .enumerate()
        .all(|(c, s)| *s == -decimated.coeff(c));
    let matrix_verified = sums_match && cases.passed() && symbolic_matches_numeric(&matrix);

    let conclusion =
        division_remainder.is_zero() && quotient == q && product_verified && matrix_verified;
    Ok(ProofTranscript {
        k,
        r_poly: r,
        p_poly: pk,
        decimated,
        q_poly: q,
        quotient,
        division_remainder,
        product_verified,
        matrix_verified,
        per_case_results: cases.per_case,
        conclusion,
    })
}
