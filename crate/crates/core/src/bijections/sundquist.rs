//! Semistandard tableaux of staircase shape `δ_n` and tournament tableaux.
//!
//! Iteration `i` empties the outer diagonal `r + c = n − i + 1`: entries
//! equal to `i` leave by jeu de taquin from the corner, and the cells still
//! left on that diagonal leave by column deletion. Everything removed forms
//! row `i` of the tournament tableau.

use serde_json::{json, Value};

use crate::color::{Color, ColorSet};
use crate::error::Error;
use crate::staircase::{StaircaseArray, Variant};

use super::tournament::Tournament;

/// `{g, y, o}`: weakly increasing rows, strictly increasing columns.
pub fn ssyt_colors() -> ColorSet {
    ColorSet::of(&[Color::Green, Color::Yellow, Color::Orange])
}

/// Rows `1..n−1`; row `i` holds `n − i` entries, each at least `i`, with
/// entries above `i` not repeated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TournamentTableau {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl TournamentTableau {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_well_formed(&self) -> bool {
        self.rows.iter().enumerate().all(|(k, row)| {
            let i = k as u32 + 1;
            row.len() == self.n - 1 - k
                && row.windows(2).all(|w| w[0] <= w[1])
                && row.iter().all(|&v| v >= i && v as usize <= self.n)
                && row.windows(2).all(|w| w[0] == i || w[0] != w[1])
        })
    }

    /// Upset between `i < j` iff `j` appears in row `i`.
    pub fn tournament(&self) -> Tournament {
        let upsets = self.rows.iter().enumerate().flat_map(|(k, row)| {
            let i = k + 1;
            row.iter()
                .filter(move |&&v| v as usize > i)
                .map(move |&v| (i, v as usize))
        });
        Tournament::new(self.n, upsets).expect("tableau entries lie in 1..=n")
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }
}

/// Forward slide into the hole at `(0, 0)`: the smaller of the right and
/// lower neighbors moves in, the lower one on a tie.
fn slide_out_corner(t: &mut [Vec<u32>]) {
    let (mut r, mut c) = (0usize, 0usize);
    loop {
        let right = t[r].get(c + 1).copied();
        let below = t.get(r + 1).and_then(|row| row.get(c)).copied();
        let (nr, nc) = match (right, below) {
            (None, None) => break,
            (Some(_), None) => (r, c + 1),
            (None, Some(_)) => (r + 1, c),
            (Some(x), Some(y)) => {
                if y <= x {
                    (r + 1, c)
                } else {
                    (r, c + 1)
                }
            }
        };
        t[r][c] = t[nr][nc];
        (r, c) = (nr, nc);
    }
    t[r].pop();
}

/// Remove the bottom cell of column `c` and push its entry left column by
/// column, each time displacing the largest entry not exceeding it; returns
/// the entry ejected from the first column.
fn column_delete(t: &mut [Vec<u32>], r: usize, c: usize) -> u32 {
    let mut y = t[r].pop().expect("cell to delete exists");
    for col in (0..c).rev() {
        let k = (0..t.len())
            .filter(|&row| t[row].len() > col && t[row][col] <= y)
            .max_by_key(|&row| t[row][col])
            .expect("some entry in the column is not larger");
        std::mem::swap(&mut t[k][col], &mut y);
    }
    y
}

fn is_staircase(t: &[Vec<u32>], m: usize) -> bool {
    (0..t.len()).all(|r| t[r].len() == m.saturating_sub(r + 1))
}

/// Sundquist's map from an SSYT of shape `δ_n` with entries at most `n`
/// (a Y array validating against `{g, y, o}`) to a tournament tableau.
pub fn sundquist(a: &StaircaseArray) -> Result<TournamentTableau, Error> {
    if a.variant() != Variant::Y {
        return Err(Error::invalid("SSYT", "expected a Y array"));
    }
    a.check(ssyt_colors())?;
    let n = a.n();
    let mut t: Vec<Vec<u32>> = a.rows().to_vec();
    let mut rows = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut out = Vec::new();
        while t.first().and_then(|row| row.first()) == Some(&(i as u32)) {
            out.push(i as u32);
            slide_out_corner(&mut t);
        }
        let d = n - i + 1;
        for r in (0..t.len()).rev() {
            if r + 1 < d && t[r].len() == d - 1 - r {
                out.push(column_delete(&mut t, r, d - 2 - r));
            }
        }
        while t.last().is_some_and(|row| row.is_empty()) {
            t.pop();
        }
        if !is_staircase(&t, n - i) {
            return Err(Error::Violation(format!(
                "iteration {i} did not leave the staircase shape of order {}",
                n - i
            )));
        }
        out.sort_unstable();
        rows.push(out);
    }
    let tt = TournamentTableau { n, rows };
    if !tt.is_well_formed() {
        return Err(Error::Violation(
            "output is not a tournament tableau".into(),
        ));
    }
    Ok(tt)
}

/// Every SSYT of shape `δ_n` with entries at most `n`, as Y arrays.
pub fn all_ssyt(n: usize) -> Vec<StaircaseArray> {
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (1..=n - i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut a = StaircaseArray::minimal(n, Variant::Y);
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        a: &mut StaircaseArray,
        out: &mut Vec<StaircaseArray>,
    ) {
        if k == cells.len() {
            out.push(a.clone().with_colors(ssyt_colors()));
            return;
        }
        let (i, j) = cells[k];
        let mut lo = i as u32;
        if j > 1 {
            lo = lo.max(a.get(i, j - 1).unwrap());
        }
        if i > 1 {
            lo = lo.max(a.get(i - 1, j).unwrap() + 1);
        }
        for v in lo..=(i + j) as u32 {
            a.set(i, j, v);
            rec(k + 1, cells, a, out);
        }
    }
    rec(0, &cells, &mut a, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn minimal_is_transitive() {
        for n in 1..=5 {
            let m = StaircaseArray::minimal(n, Variant::Y);
            let tt = sundquist(&m).unwrap();
            assert_eq!(tt.tournament(), Tournament::transitive(n));
        }
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(all_ssyt(3).len(), 8);
        assert_eq!(all_ssyt(4).len(), 64);
        for a in all_ssyt(4) {
            assert!(a.validate(ssyt_colors()));
        }
    }

    #[test]
    fn injective_small_n() {
        for n in 1..=5 {
            let all = all_ssyt(n);
            let images: HashSet<Tournament> = all
                .iter()
                .map(|a| sundquist(a).unwrap().tournament())
                .collect();
            assert_eq!(images.len(), all.len());
            assert_eq!(images.len(), 1 << (n * (n.saturating_sub(1)) / 2));
        }
    }
}
