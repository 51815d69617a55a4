//! TSSCPPs in a `2n × 2n × 2n` box and the arrays `Y_n⁺({r,g,o,(y)})`.
//!
//! The array reads the triangular fundamental domain of the lower-right
//! quadrant: `x_{i,j} = t_{2n−j, 2n+1−i−j}`, then `y = x + i`.

use std::collections::HashSet;

use crate::color::{Color, ColorSet};
use crate::error::Error;
use crate::staircase::{StaircaseArray, Variant};

use super::plane_partition::PlanePartition;

/// The color set `{r, g, o, y}` whose arrays encode TSSCPPs.
pub fn tsscpp_colors() -> ColorSet {
    ColorSet::of(&[Color::Red, Color::Green, Color::Orange, Color::Yellow])
}

pub fn tsscpp_to_yplus(pp: &PlanePartition) -> Result<StaircaseArray, Error> {
    let [a, _, _] = pp.bounds();
    if !pp.is_tsscpp() {
        return Err(Error::invalid(
            "TSSCPP",
            "not totally symmetric and self-complementary in an even cube",
        ));
    }
    let n = a / 2;
    if n == 0 {
        return Err(Error::invalid("TSSCPP", "box side must be at least 2"));
    }
    let m = 2 * n;
    let a = StaircaseArray::from_fn(n, Variant::Yplus, |i, j| {
        pp.get(m - j, m + 1 - i - j) + i as u32
    });
    Ok(a.with_colors(tsscpp_colors()))
}

/// Rebuilds the full height matrix: fill the lower-right quadrant from the
/// array and by symmetry, the upper-left quadrant by complementation, then
/// the off-diagonal quadrants by total symmetry. The result is checked.
#[allow(clippy::needless_range_loop)]
pub fn yplus_to_tsscpp(a: &StaircaseArray) -> Result<PlanePartition, Error> {
    if a.variant() != Variant::Yplus {
        return Err(Error::invalid("staircase array", "expected a Yplus array"));
    }
    a.check(tsscpp_colors())?;
    let n = a.n();
    let m = 2 * n;
    // 1-based scratch matrix
    let mut t = vec![vec![0u32; m + 1]; m + 1];
    for r in n + 1..=m {
        for c in n + 1..=r {
            let v = if r == m {
                0
            } else {
                let i = r + 1 - c;
                a.get(i, m - r).unwrap() - i as u32
            };
            t[r][c] = v;
            t[c][r] = v;
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            t[i][j] = m as u32 - t[m + 1 - i][m + 1 - j];
        }
    }
    for i in 1..=n {
        for j in n + 1..=m {
            let from_left = (1..=n).filter(|&k| t[i][k] as usize >= j).count();
            let from_right = (n + 1..=m).filter(|&k| t[j][k] as usize >= i).count();
            let v = (from_left + from_right) as u32;
            t[i][j] = v;
            t[j][i] = v;
        }
    }
    let heights: Vec<Vec<u32>> = t[1..].iter().map(|row| row[1..].to_vec()).collect();
    let pp = PlanePartition::new([m, m, m], heights)?;
    if !pp.is_tsscpp() {
        return Err(Error::invalid(
            "TSSCPP",
            "reconstruction is not totally symmetric and self-complementary",
        ));
    }
    Ok(pp)
}

/// Every TSSCPP in a `2n` cube, by depth-first search over the symmetric
/// height matrix with complementary cells paired.
pub fn all_tsscpps(n: usize) -> Vec<PlanePartition> {
    let m = 2 * n;
    let cells: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
    let mut h = vec![vec![None::<u32>; m]; m];
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        m: usize,
        h: &mut Vec<Vec<Option<u32>>>,
        out: &mut Vec<PlanePartition>,
    ) {
        if k == cells.len() {
            let heights = h
                .iter()
                .map(|r| r.iter().map(|v| v.unwrap()).collect())
                .collect();
            if let Ok(pp) = PlanePartition::new([m, m, m], heights) {
                if pp.is_tsscpp() {
                    out.push(pp);
                }
            }
            return;
        }
        let (i, j) = cells[k];
        if h[i][j].is_some() {
            rec(k + 1, cells, m, h, out);
            return;
        }
        let hi = [
            if i > 0 { h[i - 1][j] } else { None },
            if j > 0 { h[i][j - 1] } else { None },
        ]
        .into_iter()
        .flatten()
        .min()
        .unwrap_or(m as u32);
        let (ci, cj) = (m - 1 - i, m - 1 - j);
        for v in 0..=hi {
            if ((ci, cj) == (i, j) || (ci, cj) == (j, i)) && 2 * v != m as u32 {
                continue;
            }
            let c = m as u32 - v;
            let set = |h: &mut Vec<Vec<Option<u32>>>, val: Option<u32>| {
                h[i][j] = val;
                h[j][i] = val;
            };
            let pair_set = |h: &mut Vec<Vec<Option<u32>>>, val: Option<u32>| {
                h[ci][cj] = val;
                h[cj][ci] = val;
            };
            set(h, Some(v));
            pair_set(h, Some(c));
            rec(k + 1, cells, m, h, out);
            pair_set(h, None);
            set(h, None);
        }
    }
    rec(0, &cells, m, &mut h, &mut out);
    out.sort_by(|a, b| a.heights().cmp(b.heights()));
    out
}

/// The cube set of a TSSCPP, for comparisons independent of storage.
pub fn cube_set(pp: &PlanePartition) -> HashSet<[usize; 3]> {
    pp.cubes()
}
