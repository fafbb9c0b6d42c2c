//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored in ascending order, so `coeffs()[i]` is the
//! coefficient of `X^i`. The zero polynomial has no coefficients and every
//! nonzero polynomial ends in a nonzero coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * X^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from descending coefficients, leading term first.
    pub fn from_descending(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().rev().cloned().collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `X^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// Exact value at `x` by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            &(&acc * inner) + &IntPoly::constant(c.clone())
        })
    }

    /// `self(X^k)`: the coefficient of `X^i` moves to `X^(i*k)`.
    ///
    /// Panics if `k == 0`.
    pub fn compose_power(&self, k: usize) -> IntPoly {
        assert!(k >= 1, "compose_power needs k >= 1");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// `X^n * self(1/X)`: reverses the coefficients inside a window of `n + 1`.
    pub fn reverse(&self, n: usize) -> Result<IntPoly> {
        let Some(degree) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if n < degree {
            return Err(Error::WindowTooSmall { window: n, degree });
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// Classical long division over the integers.
    ///
    /// Any quotient step that would need a fractional coefficient is an
    /// error; monic divisors never trigger it.
    pub fn divrem(&self, den: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let den_deg = den.degree().ok_or(Error::DivisionByZero)?;
        let lead = &den.coeffs[den_deg];
        let mut rem = self.coeffs.clone();
        if rem.len() <= den_deg {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - den_deg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + den_deg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonIntegralQuotient {
                    degree: shift + den_deg,
                });
            }
            for (i, d) in den.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * d;
            }
            quot[shift] = q;
        }
        rem.truncate(den_deg);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Exact quotient; errors unless the remainder is zero.
    pub fn div_exact(&self, den: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.divrem(den)?;
        match r.degree() {
            None => Ok(q),
            Some(degree) => Err(Error::NonIntegralQuotient { degree }),
        }
    }

    /// Sum of the absolute values of the coefficients.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        // integer domain: the product of two nonzero leading terms is nonzero
        IntPoly { coeffs }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Descending powers with explicit signs, e.g. `X^4-3X^2+1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if exp == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match exp {
                0 => {}
                1 => f.write_str("X")?,
                _ => write!(f, "X^{exp}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        // (X^2-X-1) + (X+1) = X^2
        assert_eq!(&p(&[-1, -1, 1]) + &p(&[1, 1]), p(&[0, 0, 1]));
        assert_eq!(&IntPoly::zero() + &p(&[3, 4]), p(&[3, 4]));
        let sum = &p(&[-1, 1, 1]) + &p(&[1, -1, -1]);
        assert!(sum.is_zero());
        assert!(sum.coeffs().is_empty());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[-1, -1, 1]) * &p(&[-1, 1, 1]), p(&[1, 0, -3, 0, 1]));
        assert!((&p(&[1, 2, 3]) * &IntPoly::zero()).is_zero());

        // (2-X)^3 - (2-X)^2 - (2-X) - 1 = -X^3+5X^2-7X+1
        let t = p(&[2, -1]);
        let t2 = &t * &t;
        let t3 = &t2 * &t;
        let v = &(&(&t3 - &t2) - &t) - &IntPoly::one();
        assert_eq!(v, p(&[1, -7, 5, -1]));
    }

    #[test]
    fn neg_examples() {
        assert_eq!(-&p(&[1, -3, 1]), p(&[-1, 3, -1]));
        assert!((-IntPoly::zero()).is_zero());
        let q = p(&[4, 0, -2, 9]);
        assert_eq!(-(-q.clone()), q);
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = p(&[1, 0, -3, 0, 1]).divrem(&p(&[-1, -1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1, 1]));
        assert!(r.is_zero());

        let a = p(&[5, -2, 0, 7]);
        let (q, r) = a.divrem(&a).unwrap();
        assert_eq!(q, IntPoly::one());
        assert!(r.is_zero());

        let (q, r) = p(&[0, 0, 1]).divrem(&p(&[-1, -1, 1])).unwrap();
        assert_eq!(q, IntPoly::one());
        assert_eq!(r, p(&[1, 1]));
    }

    #[test]
    fn divrem_errors() {
        assert_eq!(
            p(&[1, 2]).divrem(&IntPoly::zero()),
            Err(Error::DivisionByZero)
        );
        // X^2 / (2X + 1) needs 1/2 at the first step
        assert_eq!(
            p(&[0, 0, 1]).divrem(&p(&[1, 2])),
            Err(Error::NonIntegralQuotient { degree: 2 })
        );
        // exact non-monic division still works
        let (q, r) = p(&[2, 6, 4]).divrem(&p(&[1, 2])).unwrap();
        assert_eq!(q, p(&[2, 2]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_low_degree_numerator() {
        let (q, r) = p(&[3, 1]).divrem(&p(&[-1, -1, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[3, 1]));
    }

    #[test]
    fn compose_power_examples() {
        assert_eq!(p(&[1, -3, 1]).compose_power(2), p(&[1, 0, -3, 0, 1]));
        let a = p(&[7, 0, -1]);
        assert_eq!(a.compose_power(1), a);
        assert_eq!(
            p(&[-1, 5, -7, 1]).compose_power(3),
            p(&[-1, 0, 0, 5, 0, 0, -7, 0, 0, 1])
        );
        assert!(IntPoly::zero().compose_power(4).is_zero());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(
            p(&[1, -7, 5, -1]).reverse(3).unwrap(),
            p(&[-1, 5, -7, 1])
        );
        assert!(IntPoly::zero().reverse(5).unwrap().is_zero());
        let a = p(&[2, 0, 1]);
        assert_eq!(a.reverse(4).unwrap().reverse(4).unwrap(), a);
        assert_eq!(
            p(&[1, 1, 1]).reverse(1),
            Err(Error::WindowTooSmall {
                window: 1,
                degree: 2
            })
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-1, -1, 1]).eval(&BigInt::from(2)), BigInt::from(1));
        assert_eq!(IntPoly::zero().eval(&BigInt::from(17)), BigInt::zero());
        assert_eq!(p(&[1, 0, -3, 0, 1]).eval(&BigInt::from(3)), BigInt::from(55));
    }

    #[test]
    fn degree_of_zero_is_absent() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(IntPoly::from_i64s(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[0, 3]).degree(), Some(1));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -3, 0, 1]).to_string(), "X^4-3X^2+1");
        assert_eq!(p(&[-1, 1, 1]).to_string(), "X^2+X-1");
        assert_eq!(p(&[1, -1]).to_string(), "-X+1");
        assert_eq!(p(&[0, -2]).to_string(), "-2X");
        assert_eq!(p(&[-5]).to_string(), "-5");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
