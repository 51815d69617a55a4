//! Sparse multivariate polynomials in `λ, x_1, ..., x_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::bigint_json;

/// Exponent vectors have fixed length `nvars`; slot 0 is `λ` and slot `k`
/// is `x_k`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPolynomial {
    pub fn zero(nvars: usize) -> Self {
        MultiPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        MultiPolynomial::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exps: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = MultiPolynomial::zero(exps.len());
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    /// The single variable in slot `k`.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[k] = 1;
        MultiPolynomial::monomial(exps, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(MultiPolynomial::one(self.nvars), |acc, _| &acc * self)
    }

    /// Value with every variable set to 1.
    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitute integer values for every variable.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(values)
                    .fold(c.clone(), |acc, (&k, v)| acc * v.pow(k))
            })
            .sum()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!({ "exps": e, "coeff": bigint_json(c) }))
                .collect(),
        )
    }
}

impl Add for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn add(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&MultiPolynomial> for MultiPolynomial {
    fn add_assign(&mut self, rhs: &MultiPolynomial) {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl Mul for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn mul(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = MultiPolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(slot, &d)| {
                    let name = if slot == 0 {
                        "λ".to_string()
                    } else {
                        format!("x{slot}")
                    };
                    if d == 1 {
                        name
                    } else {
                        format!("{name}^{d}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{c}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x1 = MultiPolynomial::var(3, 1);
        let x2 = MultiPolynomial::var(3, 2);
        let lam = MultiPolynomial::var(3, 0);
        let f = &x1 + &(&lam * &x2);
        let sq = f.pow(2);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&[1, 1, 1]), BigInt::from(2));
        assert_eq!(sq.at_ones(), BigInt::from(4));
        let neg = MultiPolynomial::monomial(vec![0, 1, 0], BigInt::from(-1));
        assert!((&x1 + &neg).is_zero());
        assert_eq!(f.to_string(), "x1 + λ*x2");
        let v = [2, 3, 5].map(BigInt::from);
        assert_eq!(f.eval(&v), BigInt::from(3 + 2 * 5));
    }

    #[test]
    fn json_sorted_by_exponent() {
        let f = &MultiPolynomial::var(2, 1) + &MultiPolynomial::var(2, 0);
        assert_eq!(
            f.to_json().to_string(),
            r#"[{"exps":[0,1],"coeff":1},{"exps":[1,0],"coeff":1}]"#
        );
    }
}
