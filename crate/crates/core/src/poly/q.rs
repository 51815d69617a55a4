//! Dense univariate polynomials in `q`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use serde_json::Value;

use super::bigint_json;
use crate::error::Error;

/// Coefficient `k` is the coefficient of `q^k`. Trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial::monomial(0)
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPolynomial { coeffs }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = QPolynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`, i.e. the coefficient sum.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// The coefficient list read backwards.
    pub fn reversed(&self) -> Self {
        QPolynomial::from_coeffs(self.coeffs.iter().rev().cloned())
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QPolynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self * q^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Exact quotient; fails if the division leaves a remainder.
    pub fn div_exact(&self, d: &QPolynomial) -> Result<QPolynomial, Error> {
        let dd = d.degree().ok_or(Error::InexactDivision)?;
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(QPolynomial::zero())
            } else {
                Err(Error::InexactDivision)
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (qk, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            if !qk.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &qk * c;
                }
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(QPolynomial::from_coeffs(quot))
    }

    /// `self * (1 - q^m) / (1 - q)`, i.e. multiplication by `[m]_q`, in
    /// linear time.
    pub fn mul_q_int(&self, m: usize) -> Self {
        if m == 0 || self.is_zero() {
            return QPolynomial::zero();
        }
        // prefix sums over a sliding window of width m
        let len = self.coeffs.len() + m - 1;
        let mut out = Vec::with_capacity(len);
        let mut window = BigInt::zero();
        for k in 0..len {
            if let Some(c) = self.coeffs.get(k) {
                window += c;
            }
            if k >= m {
                if let Some(c) = self.coeffs.get(k - m) {
                    window -= c;
                }
            }
            out.push(window.clone());
        }
        QPolynomial::from_coeffs(out)
    }

    /// Exact division by `[m]_q` in linear time; fails on a remainder.
    pub fn div_q_int(&self, m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(QPolynomial::zero());
        }
        if self.coeffs.len() < m {
            return Err(Error::InexactDivision);
        }
        // self = Q * [m]  <=>  self * (1 - q) = Q * (1 - q^m)
        let mut diff: Vec<BigInt> = Vec::with_capacity(self.coeffs.len() + 1);
        for k in 0..=self.coeffs.len() {
            let hi = self.coeffs.get(k).cloned().unwrap_or_default();
            let lo = if k > 0 {
                self.coeffs[k - 1].clone()
            } else {
                BigInt::zero()
            };
            diff.push(hi - lo);
        }
        let qlen = self.coeffs.len() + 1 - m;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in 0..qlen {
            let mut c = diff[k].clone();
            if k >= m {
                c += &quot[k - m];
            }
            quot[k] = c;
        }
        let check = QPolynomial::from_coeffs(quot.clone());
        if check.mul_q_int(m) != *self {
            return Err(Error::InexactDivision);
        }
        Ok(check)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(bigint_json).collect())
    }
}

/// `[k]_q = 1 + q + ... + q^{k-1}`.
pub fn q_int(k: usize) -> QPolynomial {
    QPolynomial::from_coeffs(vec![1; k])
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q`.
pub fn q_factorial(k: usize) -> QPolynomial {
    (1..=k).fold(QPolynomial::one(), |acc, j| acc.mul_q_int(j))
}

/// Gaussian binomial by the Pascal recurrence
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn q_binomial(n: usize, k: usize) -> QPolynomial {
    if k > n {
        return QPolynomial::zero();
    }
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for m in 1..=n {
        let mut next = vec![QPolynomial::zero(); m + 1];
        for j in 0..=m {
            let left = if j > 0 {
                row[j - 1].clone()
            } else {
                QPolynomial::zero()
            };
            let right = if j < m {
                row[j].shift(j)
            } else {
                QPolynomial::zero()
            };
            next[j] = left + right;
        }
        row = next;
    }
    row.swap_remove(k)
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)))
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)))
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl std::iter::Product for QPolynomial {
    fn product<I: Iterator<Item = QPolynomial>>(iter: I) -> QPolynomial {
        iter.fold(QPolynomial::one(), |a, b| &a * &b)
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> QPolynomial {
        iter.fold(QPolynomial::zero(), |a, b| &a + &b)
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn basics() {
        assert_eq!(q_int(1), QPolynomial::one());
        assert_eq!(q_int(0), QPolynomial::zero());
        assert_eq!(q_binomial(3, 1), p(&[1, 1, 1]));
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_factorial(3).at_one(), BigInt::from(6));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn division() {
        let a = p(&[1, 2, 3]);
        let b = p(&[4, 0, -1, 7]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(
            p(&[1, 0, 1]).div_exact(&p(&[1, 1])),
            Err(Error::InexactDivision)
        );
        for m in 1..6 {
            let up = b.mul_q_int(m);
            assert_eq!(up, &b * &q_int(m));
            assert_eq!(up.div_q_int(m).unwrap(), b);
        }
        assert!(p(&[1, 0, 1]).div_q_int(2).is_err());
    }

    #[test]
    fn binomial_symmetry_and_sum() {
        for n in 0..8 {
            let mut total = BigInt::zero();
            for k in 0..=n {
                let b = q_binomial(n, k);
                assert!(b.is_palindromic());
                assert_eq!(b, q_binomial(n, n - k));
                total += b.at_one();
                let quotient = q_factorial(n)
                    .div_exact(&(&q_factorial(k) * &q_factorial(n - k)))
                    .unwrap();
                assert_eq!(quotient, b);
            }
            assert_eq!(total, BigInt::from(1u64 << n));
        }
    }

    #[test]
    fn display_and_json() {
        assert_eq!(p(&[1, -2, 0, 1]).to_string(), "1 - 2q + q^3");
        assert_eq!(
            serde_json::to_string(&p(&[1, 3, 3, 1])).unwrap(),
            "[1,3,3,1]"
        );
        let big = QPolynomial::from_coeffs([BigInt::from(10).pow(30)]);
        assert_eq!(
            serde_json::to_string(&big).unwrap(),
            "[1000000000000000000000000000000]"
        );
    }
}
