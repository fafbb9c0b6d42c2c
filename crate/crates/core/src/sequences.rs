//! Integer linear recurrences evaluated forward and backward from a seed
//! window, and an exact checker for strided identities.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// `a(n) = sum_{i=1..k} c_i a(n-i)` seeded with `a(base), ..., a(base+k-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    coefficients: Vec<BigInt>,
    initial: Vec<BigInt>,
    base: i64,
}

/// Values of a sequence at the contiguous indices `lo..=hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceWindow {
    pub lo: i64,
    pub hi: i64,
    pub values: Vec<BigInt>,
}

impl LinearRecurrence {
    pub fn new(coefficients: Vec<BigInt>, initial: Vec<BigInt>, base: i64) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        if coefficients.len() != initial.len() {
            return Err(Error::LengthMismatch {
                coefficients: coefficients.len(),
                initial: initial.len(),
            });
        }
        Ok(LinearRecurrence {
            coefficients,
            initial,
            base,
        })
    }

    /// The recurrence whose characteristic polynomial is the monic `charpoly`.
    pub fn from_charpoly(charpoly: &IntPoly, initial: Vec<BigInt>, base: i64) -> Result<Self> {
        Self::new(recurrence_coefficients(charpoly)?, initial, base)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn initial(&self) -> &[BigInt] {
        &self.initial
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn evaluate_window(&self, lo: i64, hi: i64) -> Result<SequenceWindow> {
        if lo > hi {
            return Err(Error::EmptyRange { lo, hi });
        }
        let k = self.order();
        let mut values: VecDeque<BigInt> = self.initial.iter().cloned().collect();
        let mut first = self.base;
        let mut last = self.base + k as i64 - 1;

        while last < hi {
            let next = self
                .coefficients
                .iter()
                .zip(values.iter().rev())
                .map(|(c, a)| c * a)
                .sum::<BigInt>();
            values.push_back(next);
            last += 1;
        }

        let trailing = &self.coefficients[k - 1];
        while first > lo {
            // a(n-k) = (a(n) - sum_{i<k} c_i a(n-i)) / c_k with n = first + k - 1
            let index = first - 1;
            let mut acc = values[k - 1].clone();
            for (i, c) in self.coefficients[..k - 1].iter().enumerate() {
                acc -= c * &values[k - 2 - i];
            }
            if trailing.is_zero() {
                return Err(Error::NonIntegralBackwardStep { index });
            }
            let (q, r) = acc.div_rem(trailing);
            if !r.is_zero() {
                return Err(Error::NonIntegralBackwardStep { index });
            }
            values.push_front(q);
            first -= 1;
        }

        let skip = (lo - first) as usize;
        let take = (hi - lo + 1) as usize;
        Ok(SequenceWindow {
            lo,
            hi,
            values: values.into_iter().skip(skip).take(take).collect(),
        })
    }
}

impl SequenceWindow {
    pub fn get(&self, n: i64) -> Option<&BigInt> {
        if n < self.lo || n > self.hi {
            return None;
        }
        self.values.get((n - self.lo) as usize)
    }

    /// Sub-window `lo..=hi`, or `None` if it is not contained in this one.
    pub fn slice(&self, lo: i64, hi: i64) -> Option<SequenceWindow> {
        if lo < self.lo || hi > self.hi || lo > hi {
            return None;
        }
        let start = (lo - self.lo) as usize;
        let end = (hi - self.lo) as usize;
        Some(SequenceWindow {
            lo,
            hi,
            values: self.values[start..=end].to_vec(),
        })
    }
}

/// The forward recurrence holds at every index of `window` that has `k`
/// predecessors inside it.
pub fn recurrence_holds(rec: &LinearRecurrence, window: &SequenceWindow) -> bool {
    let k = rec.order();
    window.values.windows(k + 1).all(|w| {
        let next: BigInt = rec
            .coefficients
            .iter()
            .zip(w[..k].iter().rev())
            .map(|(c, a)| c * a)
            .sum();
        next == w[k]
    })
}

/// `[c_1, ..., c_k]` for a monic `X^k - sum c_i X^(k-i)`.
pub fn recurrence_coefficients(charpoly: &IntPoly) -> Result<Vec<BigInt>> {
    if !charpoly.is_monic() {
        return Err(Error::NotMonic);
    }
    let k = charpoly.degree().expect("monic implies nonzero");
    if k == 0 {
        return Err(Error::ConstantPolynomial);
    }
    Ok((1..=k).map(|i| -charpoly.coeff(k - i)).collect())
}

/// The k-step Fibonacci recurrence with seeds `0, ..., 0, 1` at `0..k`.
pub fn kbonacci(k: usize) -> Result<LinearRecurrence> {
    if k < 2 {
        return Err(Error::OrderTooSmall(k));
    }
    let mut initial = vec![BigInt::zero(); k];
    initial[k - 1] = BigInt::one();
    LinearRecurrence::new(vec![BigInt::one(); k], initial, 0)
}

/// The k-step recurrence with seeds drawn uniformly from `[-9, 9]`.
pub fn random_recurrence_instance(k: usize, seed: u64) -> Result<LinearRecurrence> {
    if k < 2 {
        return Err(Error::OrderTooSmall(k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let initial = (0..k).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
    LinearRecurrence::new(vec![BigInt::one(); k], initial, 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub n: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Outcome of checking `a(n) = sum_j coeffs[j] a(n - stride (j+1))` for
/// every `n` in `lo..=hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub lo: i64,
    pub hi: i64,
    pub stride: usize,
    /// One flag per `n` in `lo..=hi`.
    pub holds: Vec<bool>,
    pub first_failure: Option<Counterexample>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn checked(&self) -> usize {
        self.holds.len()
    }

    /// `(checked, held)` per residue of `n` modulo `modulus`.
    pub fn by_residue(&self, modulus: usize) -> Vec<(usize, usize)> {
        let m = modulus as i64;
        let mut out = vec![(0, 0); modulus];
        for (offset, &ok) in self.holds.iter().enumerate() {
            let n = self.lo + offset as i64;
            let slot = &mut out[n.rem_euclid(m) as usize];
            slot.0 += 1;
            if ok {
                slot.1 += 1;
            }
        }
        out
    }
}

/// Checks the identity against an already evaluated window.
pub fn check_identity_in(
    window: &SequenceWindow,
    identity_coeffs: &[BigInt],
    stride: usize,
    lo: i64,
    hi: i64,
) -> Result<IdentityReport> {
    if stride == 0 {
        return Err(Error::ZeroStride);
    }
    if identity_coeffs.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    let reach = (stride * identity_coeffs.len()) as i64;
    if window.lo > lo - reach || window.hi < hi {
        return Err(Error::WindowTooNarrow {
            lo: window.lo,
            hi: window.hi,
            need_lo: lo - reach,
            need_hi: hi,
        });
    }
    let at = |n: i64| window.get(n).expect("covered by the window check");
    let mut holds = Vec::with_capacity((hi - lo + 1) as usize);
    let mut first_failure = None;
    for n in lo..=hi {
        let lhs = at(n).clone();
        let rhs: BigInt = identity_coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * at(n - stride as i64 * (j as i64 + 1)))
            .sum();
        let ok = lhs == rhs;
        if !ok && first_failure.is_none() {
            first_failure = Some(Counterexample { n, lhs, rhs });
        }
        holds.push(ok);
    }
    Ok(IdentityReport {
        lo,
        hi,
        stride,
        holds,
        first_failure,
    })
}

/// Evaluates `rec` far enough back to cover every lagged term, then checks
/// the identity for each `n` in `lo..=hi`.
pub fn check_identity(
    rec: &LinearRecurrence,
    identity_coeffs: &[BigInt],
    stride: usize,
    lo: i64,
    hi: i64,
) -> Result<IdentityReport> {
    if stride == 0 {
        return Err(Error::ZeroStride);
    }
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    let reach = (stride * identity_coeffs.len()) as i64;
    let window = rec.evaluate_window(lo - reach, hi)?;
    check_identity_in(&window, identity_coeffs, stride, lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn fibonacci_from_kbonacci() {
        let w = kbonacci(2).unwrap().evaluate_window(0, 7).unwrap();
        assert_eq!(w.values, ints(&[0, 1, 1, 2, 3, 5, 8, 13]));
    }

    #[test]
    fn tribonacci_and_tetranacci_decimations() {
        let w = kbonacci(3).unwrap().evaluate_window(0, 18).unwrap();
        let every3: Vec<_> = (0..=6).map(|i| w.get(3 * i).unwrap().clone()).collect();
        assert_eq!(every3, ints(&[0, 1, 7, 44, 274, 1705, 10609]));

        let w = kbonacci(4).unwrap().evaluate_window(0, 24).unwrap();
        let every4: Vec<_> = (0..=6).map(|i| w.get(4 * i).unwrap().clone()).collect();
        assert_eq!(every4, ints(&[0, 1, 15, 208, 2872, 39648, 547337]));
    }

    #[test]
    fn kbonacci_rejects_small_order() {
        assert_eq!(kbonacci(1), Err(Error::OrderTooSmall(1)));
        assert_eq!(random_recurrence_instance(0, 3), Err(Error::OrderTooSmall(0)));
    }

    #[test]
    fn backward_extension() {
        let fib = kbonacci(2).unwrap();
        assert_eq!(
            fib.evaluate_window(-4, 4).unwrap().values,
            ints(&[-3, 2, -1, 1, 0, 1, 1, 2, 3])
        );
        // F(-1) = F(2) - F(1) - F(0) = 1, F(-2) = F(1) - F(0) - F(-1) = -1,
        // F(-3) = F(0) - F(-1) - F(-2) = 0
        let trib = kbonacci(3).unwrap();
        let w = trib.evaluate_window(-3, 2).unwrap();
        assert_eq!(w.values, ints(&[0, -1, 1, 0, 0, 1]));
        for i in 3..w.values.len() {
            let sum: BigInt = w.values[i - 3..i].iter().sum();
            assert_eq!(w.values[i], sum);
        }
    }

    #[test]
    fn seed_window_is_the_initial_values() {
        let rec = LinearRecurrence::new(ints(&[2, -3, 5]), ints(&[4, -1, 7]), 10).unwrap();
        assert_eq!(rec.evaluate_window(10, 12).unwrap().values, ints(&[4, -1, 7]));
    }

    #[test]
    fn non_integral_backward_step() {
        // a(n) = a(n-1) + 2 a(n-2): a(-1) = (a(1) - a(0)) / 2 = 1/2
        let rec = LinearRecurrence::new(ints(&[1, 2]), ints(&[0, 1]), 0).unwrap();
        assert_eq!(
            rec.evaluate_window(-1, 3),
            Err(Error::NonIntegralBackwardStep { index: -1 })
        );
        let zero_tail = LinearRecurrence::new(ints(&[1, 0]), ints(&[1, 1]), 0).unwrap();
        assert!(zero_tail.evaluate_window(0, 5).is_ok());
        assert_eq!(
            zero_tail.evaluate_window(-1, 5),
            Err(Error::NonIntegralBackwardStep { index: -1 })
        );
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            LinearRecurrence::new(vec![], vec![], 0),
            Err(Error::EmptyCoefficients)
        );
        assert_eq!(
            LinearRecurrence::new(ints(&[1, 1]), ints(&[0]), 0),
            Err(Error::LengthMismatch {
                coefficients: 2,
                initial: 1
            })
        );
    }

    #[test]
    fn identity_checks() {
        let fib = kbonacci(2).unwrap();
        let r = check_identity(&fib, &ints(&[3, -1]), 2, 4, 50).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked(), 47);

        let tet = kbonacci(4).unwrap();
        assert!(check_identity(&tet, &ints(&[15, -17, 7, -1]), 4, 16, 60)
            .unwrap()
            .passed());

        let bad = check_identity(&fib, &ints(&[3, -2]), 2, 4, 10).unwrap();
        assert!(!bad.passed());
        assert!(bad.holds[0], "n = 4 holds by coincidence");
        assert_eq!(
            bad.first_failure,
            Some(Counterexample {
                n: 5,
                lhs: BigInt::from(5),
                rhs: BigInt::from(4)
            })
        );
    }

    #[test]
    fn window_too_narrow() {
        let w = kbonacci(2).unwrap().evaluate_window(0, 20).unwrap();
        assert_eq!(
            check_identity_in(&w, &ints(&[3, -1]), 2, 2, 20),
            Err(Error::WindowTooNarrow {
                lo: 0,
                hi: 20,
                need_lo: -2,
                need_hi: 20
            })
        );
        assert!(check_identity_in(&w, &ints(&[3, -1]), 2, 4, 20).unwrap().passed());
    }

    #[test]
    fn random_instances() {
        let a = random_recurrence_instance(2, 42).unwrap();
        let b = random_recurrence_instance(2, 42).unwrap();
        assert_eq!(a, b);
        for seed in 0..50 {
            let r = random_recurrence_instance(3, seed).unwrap();
            assert!(r
                .initial()
                .iter()
                .all(|v| *v >= BigInt::from(-9) && *v <= BigInt::from(9)));
        }
        let r = random_recurrence_instance(3, 11).unwrap();
        assert!(check_identity(&r, &ints(&[7, -5, 1]), 3, -20, 100).unwrap().passed());
    }

    #[test]
    fn residue_tally() {
        let fib = kbonacci(2).unwrap();
        let r = check_identity(&fib, &ints(&[3, -1]), 2, -3, 4).unwrap();
        assert_eq!(r.by_residue(2), vec![(4, 4), (4, 4)]);
    }
}
