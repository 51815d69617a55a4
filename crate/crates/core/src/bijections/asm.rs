//! Alternating sign matrices, monotone triangles, and the rotation onto
//! `Y_n⁺({b,y,o,g})`.

use serde_json::{json, Value};

use crate::color::asm_set;
use crate::error::Error;
use crate::staircase::{StaircaseArray, Variant};

/// An `n × n` matrix over `{−1, 0, 1}` whose rows and columns sum to 1 and
/// whose nonzero entries alternate in sign along every row and column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm {
    entries: Vec<Vec<i8>>,
}

fn alternates(line: impl Iterator<Item = i8>) -> bool {
    let mut expect = 1;
    let mut sum = 0;
    for v in line.filter(|&v| v != 0) {
        if v != expect {
            return false;
        }
        expect = -expect;
        sum += v;
    }
    sum == 1
}

impl Asm {
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self, Error> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("ASM", "matrix is not square"));
        }
        for (i, row) in entries.iter().enumerate() {
            if !alternates(row.iter().copied()) {
                return Err(Error::invalid(
                    "ASM",
                    format!("row {} does not alternate to sum 1", i + 1),
                ));
            }
        }
        for j in 0..n {
            if !alternates(entries.iter().map(|r| r[j])) {
                return Err(Error::invalid(
                    "ASM",
                    format!("column {} does not alternate to sum 1", j + 1),
                ));
            }
        }
        Ok(Asm { entries })
    }

    pub fn identity(n: usize) -> Self {
        Asm {
            entries: (0..n)
                .map(|i| (0..n).map(|j| i8::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    /// `A_{ij}` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i - 1][j - 1]
    }

    /// `Σ A_{ij} A_{kl}` over `i > k`, `j < l`.
    pub fn inversion_number(&self) -> i64 {
        let n = self.n();
        let mut total = 0i64;
        for i in 0..n {
            for j in 0..n {
                let a = self.entries[i][j] as i64;
                if a == 0 {
                    continue;
                }
                for k in 0..i {
                    for l in j + 1..n {
                        total += a * self.entries[k][l] as i64;
                    }
                }
            }
        }
        total
    }

    /// Number of `−1` entries.
    pub fn num_neg(&self) -> usize {
        self.entries.iter().flatten().filter(|&&v| v < 0).count()
    }

    pub fn to_json(&self) -> Value {
        json!(self.entries)
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let rows: Vec<Vec<i8>> = serde_json::from_value(v.clone())
            .map_err(|e| Error::invalid("ASM", format!("expected an integer matrix: {e}")))?;
        Asm::new(rows)
    }
}

/// Rows `a_1, ..., a_n` with row `i` of length `i`, bottom row `1..n`,
/// strictly increasing rows and `a_{i,j} <= a_{i-1,j} <= a_{i,j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<u32>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let n = rows.len();
        let bad = |why: String| Err(Error::invalid("monotone triangle", why));
        for (k, row) in rows.iter().enumerate() {
            if row.len() != k + 1 {
                return bad(format!("row {} has length {}", k + 1, row.len()));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("row {} is not strictly increasing", k + 1));
            }
            if row.iter().any(|&v| v < 1 || v as usize > n) {
                return bad(format!("row {} has an entry outside 1..={n}", k + 1));
            }
        }
        if let Some(last) = rows.last() {
            if last.iter().enumerate().any(|(j, &v)| v as usize != j + 1) {
                return bad("bottom row must be 1 2 ... n".into());
            }
        }
        for k in 1..n {
            let (up, row) = (&rows[k - 1], &rows[k]);
            for j in 0..k {
                if !(row[j] <= up[j] && up[j] <= row[j + 1]) {
                    return bad(format!("rows {} and {} do not interlace", k, k + 1));
                }
            }
        }
        Ok(MonotoneTriangle { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `a_{r,k}`, 1-based.
    pub fn get(&self, r: usize, k: usize) -> u32 {
        self.rows[r - 1][k - 1]
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let rows: Vec<Vec<u32>> = serde_json::from_value(v.clone()).map_err(|e| {
            Error::invalid("monotone triangle", format!("expected integer rows: {e}"))
        })?;
        MonotoneTriangle::new(rows)
    }
}

/// Row `i` lists the columns whose partial sum through row `i` is 1.
pub fn asm_to_monotone(a: &Asm) -> MonotoneTriangle {
    let n = a.n();
    let mut partial = vec![0i32; n];
    let mut rows = Vec::with_capacity(n);
    for row in a.entries() {
        for (p, &v) in partial.iter_mut().zip(row) {
            *p += v as i32;
        }
        rows.push(
            (0..n)
                .filter(|&j| partial[j] == 1)
                .map(|j| j as u32 + 1)
                .collect(),
        );
    }
    MonotoneTriangle { rows }
}

/// `A_{ij} = [j in row i] − [j in row i−1]`.
pub fn monotone_to_asm(m: &MonotoneTriangle) -> Result<Asm, Error> {
    let m = MonotoneTriangle::new(m.rows.clone())?;
    let n = m.n();
    let mut entries = vec![vec![0i8; n]; n];
    for (i, row) in m.rows.iter().enumerate() {
        for &c in row {
            entries[i][c as usize - 1] += 1;
        }
        if i > 0 {
            for &c in &m.rows[i - 1] {
                entries[i][c as usize - 1] -= 1;
            }
        }
    }
    Asm::new(entries)
}

/// Rotate clockwise by a quarter turn: `y_{i,j} = a_{n−j, i}`, with the
/// bottom row becoming column 0.
pub fn monotone_to_yplus(m: &MonotoneTriangle) -> Result<StaircaseArray, Error> {
    let m = MonotoneTriangle::new(m.rows.clone())?;
    let n = m.n();
    if n == 0 {
        return Err(Error::invalid(
            "monotone triangle",
            "order must be at least 1",
        ));
    }
    Ok(StaircaseArray::from_fn(n, Variant::Yplus, |i, j| m.get(n - j, i)).with_colors(asm_set()))
}

/// Inverse of [`monotone_to_yplus`]: `a_{r,i} = y_{i, n−r}`.
pub fn yplus_to_monotone(a: &StaircaseArray) -> Result<MonotoneTriangle, Error> {
    if a.variant() != Variant::Yplus {
        return Err(Error::invalid("staircase array", "expected a Yplus array"));
    }
    a.check(asm_set())?;
    let n = a.n();
    let rows = (1..=n)
        .map(|r| (1..=r).map(|i| a.get(i, n - r).unwrap()).collect())
        .collect();
    MonotoneTriangle::new(rows)
}

pub fn asm_to_yplus(a: &Asm) -> StaircaseArray {
    monotone_to_yplus(&asm_to_monotone(a)).expect("ASM rows give a monotone triangle")
}

pub fn yplus_to_asm(a: &StaircaseArray) -> Result<Asm, Error> {
    monotone_to_asm(&yplus_to_monotone(a)?)
}

/// Whether `a` is one of the ASM arrays.
pub fn is_asm_array(a: &StaircaseArray) -> bool {
    a.variant() == Variant::Yplus && a.validate(asm_set())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_asm() -> Asm {
        Asm::new(vec![
            vec![0, 1, 0, 0],
            vec![1, -1, 0, 1],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 0],
        ])
        .unwrap()
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(Asm::new(vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(Asm::new(vec![vec![1, -1, 1], vec![0, 1, 0], vec![0, 1, 0]]).is_err());
        assert!(Asm::new(vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn order_four_pipeline() {
        let m = asm_to_monotone(&sample_asm());
        assert_eq!(
            m.rows(),
            &[vec![2], vec![1, 4], vec![1, 3, 4], vec![1, 2, 3, 4]]
        );
        let y = monotone_to_yplus(&m).unwrap();
        assert_eq!(
            y.rows(),
            &[vec![1, 1, 1, 2], vec![2, 3, 4], vec![3, 4], vec![4]]
        );
        assert!(y.validate(asm_set()));
        assert_eq!(yplus_to_monotone(&y).unwrap(), m);
        assert_eq!(monotone_to_asm(&m).unwrap(), sample_asm());
    }

    #[test]
    fn identity_cases() {
        let id = Asm::identity(3);
        assert_eq!(
            asm_to_monotone(&id).rows(),
            &[vec![1], vec![1, 2], vec![1, 2, 3]]
        );
        assert_eq!(
            asm_to_yplus(&id),
            StaircaseArray::minimal(3, Variant::Yplus).with_colors(asm_set())
        );
        assert_eq!(id.inversion_number(), 0);
        assert_eq!(id.num_neg(), 0);
        let anti = Asm::new(vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]).unwrap();
        assert_eq!(anti.inversion_number(), 3);
        let mid = Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(mid.num_neg(), 1);
    }

    #[test]
    fn monotone_validation() {
        assert!(MonotoneTriangle::new(vec![vec![2], vec![1, 3], vec![1, 2, 3]]).is_ok());
        assert!(MonotoneTriangle::new(vec![vec![3], vec![1, 2], vec![1, 2, 3]]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![1], vec![2, 2]]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![1], vec![1, 3]]).is_err());
    }
}
