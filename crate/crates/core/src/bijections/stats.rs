//! Diagonal-equality and content statistics on Yplus arrays.

use std::collections::BTreeMap;

use crate::staircase::{StaircaseArray, Variant};

/// Statistics of a Yplus array of order `n`. Vectors are indexed from 1
/// through slot `k − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrayStats {
    /// Entries of value `k` in row `i` equal to their southwest neighbor.
    pub e_row_value: BTreeMap<(usize, u32), usize>,
    /// `E_i`, per row.
    pub e_row: Vec<usize>,
    /// `E^d`, per diagonal `d = i + j`.
    pub e_diag: Vec<usize>,
    pub e: usize,
    /// Entries of value `k` in row `i`, column 0 included.
    pub c_row_value: BTreeMap<(usize, u32), usize>,
    /// `C_k`, per value.
    pub c: Vec<usize>,
    /// Entries above their west neighbor and below their southwest one.
    pub n_special: usize,
}

impl ArrayStats {
    pub fn e_at(&self, i: usize, k: u32) -> usize {
        self.e_row_value.get(&(i, k)).copied().unwrap_or(0)
    }

    pub fn c_at(&self, i: usize, k: u32) -> usize {
        self.c_row_value.get(&(i, k)).copied().unwrap_or(0)
    }
}

/// Whether `(i, j)`, `j ≥ 1`, equals its southwest neighbor.
pub fn is_diagonal_equality(a: &StaircaseArray, i: usize, j: usize) -> bool {
    j >= 1 && a.get(i, j).is_some() && a.get(i, j) == a.get(i + 1, j - 1)
}

pub fn compute_stats(a: &StaircaseArray) -> ArrayStats {
    assert_eq!(
        a.variant(),
        Variant::Yplus,
        "statistics are defined on Yplus arrays"
    );
    let n = a.n();
    let mut s = ArrayStats {
        e_row_value: BTreeMap::new(),
        e_row: vec![0; n],
        e_diag: vec![0; n],
        e: 0,
        c_row_value: BTreeMap::new(),
        c: vec![0; n],
        n_special: 0,
    };
    for i in 1..=n {
        for j in 0..=n - i {
            let v = a.get(i, j).unwrap();
            *s.c_row_value.entry((i, v)).or_default() += 1;
            if (1..=n).contains(&(v as usize)) {
                s.c[v as usize - 1] += 1;
            }
            if j == 0 {
                continue;
            }
            let sw = a.get(i + 1, j - 1).unwrap();
            if v == sw {
                *s.e_row_value.entry((i, v)).or_default() += 1;
                s.e_row[i - 1] += 1;
                s.e_diag[i + j - 1] += 1;
                s.e += 1;
            }
            if v > a.get(i, j - 1).unwrap() && v < sw {
                s.n_special += 1;
            }
        }
    }
    s
}
