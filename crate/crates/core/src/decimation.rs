//! Decimation oracle that does not use the triangles.
//!
//! If `A` is the companion matrix of a recurrence, the stride-`s` subsequence
//! satisfies the recurrence whose characteristic polynomial is
//! `det(X I - A^s)`. The determinant is taken by fraction-free (Bareiss)
//! elimination over `Z[X]`; every pivot is a leading principal minor of
//! `X I - A^s`, hence monic, so each division is exact.

use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::sequences::recurrence_coefficients;

/// Square matrix with exact integer entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics unless every row has `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.n.max(1)).map(<[_]>::to_vec).collect()
    }

    fn scaled(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    fn add_assign(&mut self, other: &IntMatrix) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.get(l, j);
                }
            }
        }
        out
    }
}

/// Coefficients of the recurrence in the first row, ones on the subdiagonal.
pub fn companion_matrix(charpoly: &IntPoly) -> Result<IntMatrix> {
    let coeffs = recurrence_coefficients(charpoly)?;
    let n = coeffs.len();
    let mut m = IntMatrix::zeros(n);
    for (j, c) in coeffs.into_iter().enumerate() {
        m.entries[j] = c;
    }
    for i in 1..n {
        m.entries[i * n + i - 1] = BigInt::one();
    }
    Ok(m)
}

/// `m^e` by repeated squaring. Panics if `e == 0`.
pub fn matrix_power(m: &IntMatrix, e: usize) -> IntMatrix {
    assert!(e >= 1, "matrix_power needs e >= 1");
    let mut base = m.clone();
    let mut acc: Option<IntMatrix> = None;
    let mut e = e;
    loop {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => &a * &base,
            });
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        base = &base * &base;
    }
    acc.expect("e >= 1")
}

/// `det(X I - m)` by Bareiss elimination over `Z[X]`.
pub fn char_poly(m: &IntMatrix) -> IntPoly {
    let n = m.n;
    if n == 0 {
        return IntPoly::one();
    }
    let mut a: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = IntPoly::constant(-m.get(i, j));
                    if i == j {
                        &c + &IntPoly::x()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = IntPoly::one();
    for p in 0..n - 1 {
        for i in p + 1..n {
            for j in p + 1..n {
                let num = &(&a[p][p] * &a[i][j]) - &(&a[i][p] * &a[p][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step divides by a monic principal minor");
            }
        }
        prev = a[p][p].clone();
    }
    a[n - 1][n - 1].clone()
}

/// Evaluates `poly` at a square matrix.
pub fn eval_at_matrix(poly: &IntPoly, m: &IntMatrix) -> IntMatrix {
    let mut acc = IntMatrix::zeros(m.n);
    for c in poly.coeffs().iter().rev() {
        acc = &acc * m;
        acc.add_assign(&IntMatrix::identity(m.n).scaled(c));
    }
    acc
}

/// Characteristic polynomial of the stride-`stride` subsequence of any
/// solution of the recurrence with characteristic polynomial `rec_charpoly`.
pub fn decimated_charpoly(rec_charpoly: &IntPoly, stride: usize) -> Result<IntPoly> {
    if stride == 0 {
        return Err(Error::ZeroStride);
    }
    let companion = companion_matrix(rec_charpoly)?;
    Ok(char_poly(&matrix_power(&companion, stride)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prover::{p_poly, r_poly};

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn companion_examples() {
        assert_eq!(
            companion_matrix(&poly(&[-1, -1, 1])).unwrap(),
            IntMatrix::from_i64_rows(&[&[1, 1], &[1, 0]])
        );
        assert_eq!(
            companion_matrix(&poly(&[-7, 1])).unwrap(),
            IntMatrix::from_i64_rows(&[&[7]])
        );
        assert_eq!(
            companion_matrix(&poly(&[-1, -1, -1, 1])).unwrap(),
            IntMatrix::from_i64_rows(&[&[1, 1, 1], &[1, 0, 0], &[0, 1, 0]])
        );
        assert_eq!(companion_matrix(&poly(&[1, 2])), Err(Error::NotMonic));
        assert_eq!(companion_matrix(&poly(&[1])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn powers() {
        let fib = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(
            matrix_power(&fib, 2),
            IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]])
        );
        assert_eq!(matrix_power(&fib, 1), fib);
        assert_eq!(
            matrix_power(&fib, 5),
            IntMatrix::from_i64_rows(&[&[8, 5], &[5, 3]])
        );
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(
            char_poly(&IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]])),
            poly(&[1, -3, 1])
        );
        assert_eq!(char_poly(&IntMatrix::identity(3)), poly(&[-1, 3, -3, 1]));
        let r3 = r_poly(3).unwrap();
        assert_eq!(char_poly(&companion_matrix(&r3).unwrap()), r3);
    }

    #[test]
    fn char_poly_with_zero_leading_entry() {
        // the top-left entry of X I - A is X, never a zero pivot
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&m), poly(&[-1, 0, 1]));
    }

    #[test]
    fn decimation_examples() {
        let r2 = r_poly(2).unwrap();
        assert_eq!(decimated_charpoly(&r2, 2).unwrap(), p_poly(2).unwrap());
        let r4 = r_poly(4).unwrap();
        assert_eq!(decimated_charpoly(&r4, 4).unwrap(), p_poly(4).unwrap());
        let pell = poly(&[-1, -2, 1]);
        assert_eq!(decimated_charpoly(&pell, 1).unwrap(), pell);
        assert_eq!(decimated_charpoly(&pell, 0), Err(Error::ZeroStride));
    }

    #[test]
    fn cayley_hamilton() {
        let m = IntMatrix::from_i64_rows(&[&[3, -1, 4], &[1, 5, -9], &[2, 6, 5]]);
        let cp = char_poly(&m);
        assert_eq!(eval_at_matrix(&cp, &m), IntMatrix::zeros(3));
    }
}
