//! The coefficient triangles `P` and `Q`.
//!
//! `P` has `-1` down column 0 and `P[i][j] = 2 P[i-1][j] - P[i-1][j-1]` for
//! `j >= 1`. `Q` is its backward difference down columns,
//! `Q[i][j] = P[i][j] - P[i-1][j]`, with row 0 all zeros. Entries outside
//! `0 <= j <= i` read as zero.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::prover::r_poly;

/// Rows `0..=n` of `P`; `rows[i]` has `i + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleP {
    rows: Vec<Vec<BigInt>>,
}

/// Rows `0..=n` of `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleQ {
    rows: Vec<Vec<BigInt>>,
}

impl TriangleP {
    pub fn new(last_row: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(last_row + 1);
        rows.push(vec![-BigInt::one()]);
        for i in 1..=last_row {
            let prev = &rows[i - 1];
            let mut row = Vec::with_capacity(i + 1);
            // column 0 is an initial condition, not a recursion output
            row.push(-BigInt::one());
            for j in 1..=i {
                let above = prev.get(j).cloned().unwrap_or_default();
                row.push(2 * above - &prev[j - 1]);
            }
            rows.push(row);
        }
        TriangleP { rows }
    }

    pub fn last_row(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    /// `P[i][j]`, zero outside the triangle. Panics if `i` is past the last row.
    pub fn get(&self, i: usize, j: i64) -> BigInt {
        let row = &self.rows[i];
        usize::try_from(j)
            .ok()
            .and_then(|j| row.get(j).cloned())
            .unwrap_or_default()
    }
}

impl TriangleQ {
    pub fn new(last_row: usize) -> Self {
        Self::from_p(&TriangleP::new(last_row))
    }

    pub fn from_p(p: &TriangleP) -> Self {
        let mut rows = Vec::with_capacity(p.rows.len());
        rows.push(vec![BigInt::zero()]);
        for i in 1..p.rows.len() {
            let row = (0..=i)
                .map(|j| p.get(i, j as i64) - p.get(i - 1, j as i64))
                .collect();
            rows.push(row);
        }
        TriangleQ { rows }
    }

    pub fn last_row(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: i64) -> BigInt {
        let row = &self.rows[i];
        usize::try_from(j)
            .ok()
            .and_then(|j| row.get(j).cloned())
            .unwrap_or_default()
    }
}

pub fn p_row(k: usize) -> Vec<BigInt> {
    TriangleP::new(k).rows.pop().expect("nonempty triangle")
}

pub fn q_row(k: usize) -> Vec<BigInt> {
    TriangleQ::new(k).rows.pop().expect("nonempty triangle")
}

pub fn p_entry(i: i64, j: i64) -> Result<BigInt> {
    let row = usize::try_from(i).map_err(|_| Error::NegativeRow(i))?;
    if j < 0 || j > i {
        return Ok(BigInt::zero());
    }
    Ok(TriangleP::new(row).get(row, j))
}

pub fn q_entry(i: i64, j: i64) -> Result<BigInt> {
    let row = usize::try_from(i).map_err(|_| Error::NegativeRow(i))?;
    if j < 0 || j > i {
        return Ok(BigInt::zero());
    }
    Ok(TriangleQ::new(row).get(row, j))
}

/// Row `k` of `P` rebuilt from `r_k`: substitute `2 - Y`, reverse at degree
/// `k` to get `p_k(X)`, then read `P[k][i]` off as minus the coefficient of
/// `X^(k-i)`.
pub fn p_row_via_reversal(k: usize) -> Result<Vec<BigInt>> {
    let two_minus_y = IntPoly::from_i64s(&[2, -1]);
    let shifted = r_poly(k)?.compose(&two_minus_y);
    let pk = shifted.reverse(k)?;
    let mut row = Vec::with_capacity(k + 1);
    row.push(-BigInt::one());
    for i in 1..=k {
        row.push(-pk.coeff(k - i));
    }
    Ok(row)
}

/// Row `n` of `Q` as the ascending coefficients of `X (2 - X)^(n-1)`.
///
/// Panics if `n == 0`.
pub fn q_row_via_polynomial(n: usize) -> Vec<BigInt> {
    assert!(n >= 1, "row 0 of Q has no polynomial form");
    let two_minus_x = IntPoly::from_i64s(&[2, -1]);
    let mut poly = IntPoly::x();
    for _ in 1..n {
        poly = &poly * &two_minus_x;
    }
    let mut coeffs = poly.into_coeffs();
    coeffs.resize(n + 1, BigInt::zero());
    coeffs
}

/// `P[n][1] == 2^n - 1` and `Q[n][1] == 2^(n-1)`, with the powers taken by
/// shifting rather than by the triangle recursion.
pub fn closed_form_check(n: usize) -> bool {
    assert!(n >= 1);
    let p = TriangleP::new(n);
    let q = TriangleQ::from_p(&p);
    let pow = |e: usize| BigInt::one() << e;
    p.get(n, 1) == pow(n) - 1 && q.get(n, 1) == pow(n - 1)
}
