//! Row shuffles between `Y_n⁺({b,r,(g)})` and `Y_n⁺({b,r,(g),y})`.
//!
//! Two arrays lie in the same fiber when their rows agree as multisets; the
//! fiber representative is the one with weakly increasing rows.

use crate::error::Error;
use crate::staircase::{StaircaseArray, Variant};

use super::tournament::{tournament_colors, tsscpp_tournament_colors};

/// Every blue+red array whose rows are rearrangements of the rows of `a`,
/// column 0 fixed. Rows are chosen bottom-up; each entry must equal its
/// southwest neighbor or be one less.
pub fn row_shuffles(a: &StaircaseArray) -> Result<Vec<StaircaseArray>, Error> {
    if a.variant() != Variant::Yplus {
        return Err(Error::invalid("staircase array", "expected a Yplus array"));
    }
    a.check(tsscpp_tournament_colors())?;
    let n = a.n();
    let mut out = Vec::new();
    let mut cur = a.clone().with_colors(tournament_colors());
    shuffle_rows(n.saturating_sub(1), a, &mut cur, &mut out);
    Ok(out)
}

fn shuffle_rows(
    i: usize,
    a: &StaircaseArray,
    cur: &mut StaircaseArray,
    out: &mut Vec<StaircaseArray>,
) {
    if i == 0 {
        out.push(cur.clone());
        return;
    }
    let n = a.n();
    let mut pool: Vec<u32> = (1..=n - i).map(|j| a.get(i, j).unwrap()).collect();
    pool.sort_unstable();
    let mut used = vec![false; pool.len()];
    place(i, 1, &pool, &mut used, a, cur, out);
}

fn place(
    i: usize,
    j: usize,
    pool: &[u32],
    used: &mut [bool],
    a: &StaircaseArray,
    cur: &mut StaircaseArray,
    out: &mut Vec<StaircaseArray>,
) {
    if j > pool.len() {
        shuffle_rows(i - 1, a, cur, out);
        return;
    }
    let sw = cur.get(i + 1, j - 1).unwrap();
    for k in 0..pool.len() {
        let v = pool[k];
        if used[k] || (k > 0 && pool[k - 1] == v && !used[k - 1]) {
            continue;
        }
        if v != sw && v + 1 != sw {
            continue;
        }
        used[k] = true;
        cur.set(i, j, v);
        place(i, j + 1, pool, used, a, cur, out);
        used[k] = false;
    }
}

/// Sort rows bottom-up by swapping adjacent out-of-order entries of row `i`
/// together with their whole northeast diagonals.
pub fn normalize_rows(a: &StaircaseArray) -> Result<StaircaseArray, Error> {
    if a.variant() != Variant::Yplus {
        return Err(Error::invalid("staircase array", "expected a Yplus array"));
    }
    a.check(tournament_colors())?;
    let n = a.n();
    let mut b = a.clone();
    for i in (1..n).rev() {
        let len = n - i;
        let mut swapped = true;
        while swapped {
            swapped = false;
            for j in 0..len.saturating_sub(1) {
                if b.get(i, j + 1) > b.get(i, j + 2) {
                    for t in 0..i {
                        let (p, q) = (
                            b.get(i - t, j + 1 + t).unwrap(),
                            b.get(i - t, j + 2 + t).unwrap(),
                        );
                        b.set(i - t, j + 1 + t, q);
                        b.set(i - t, j + 2 + t, p);
                    }
                    swapped = true;
                }
            }
        }
    }
    let b = b.with_colors(tsscpp_tournament_colors());
    debug_assert!(b.validate(tsscpp_tournament_colors()));
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::stats::compute_stats;
    use crate::bijections::tournament::{tournament_to_yplus, Tournament};
    use std::collections::BTreeMap;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
    }

    fn y(rows: Vec<Vec<u32>>) -> StaircaseArray {
        StaircaseArray::new(rows.len(), Variant::Yplus, rows).unwrap()
    }

    #[test]
    fn minimal_has_one_shuffle() {
        let m = StaircaseArray::minimal(4, Variant::Yplus);
        let s = row_shuffles(&m).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].rows(), m.rows());
    }

    #[test]
    fn rejected_array_normalizes() {
        let a = y(vec![vec![1, 2, 1], vec![2, 2], vec![3]]);
        let b = normalize_rows(&a).unwrap();
        assert_eq!(b.rows(), &[vec![1, 1, 2], vec![2, 2], vec![3]]);
        assert_eq!(normalize_rows(&b).unwrap(), b);
        assert_eq!(row_shuffles(&b).unwrap().len(), 2);
    }

    #[test]
    fn fibers_partition_tournament_arrays() {
        for n in 1..=5 {
            let mut fibers: BTreeMap<Vec<Vec<u32>>, usize> = BTreeMap::new();
            for t in Tournament::all(n) {
                let a = tournament_to_yplus(&t);
                let rep = normalize_rows(&a).unwrap();
                assert!(rep.validate(tsscpp_tournament_colors()));
                for (r, s) in rep.rows().iter().zip(a.rows()) {
                    let (mut r, mut s) = (r.clone(), s.clone());
                    r.sort_unstable();
                    s.sort_unstable();
                    assert_eq!(r, s);
                }
                *fibers.entry(rep.rows().to_vec()).or_default() += 1;
            }
            for (rows, size) in &fibers {
                let rep = y(rows.clone());
                let shuffles = row_shuffles(&rep).unwrap();
                assert_eq!(shuffles.len(), *size);
                for s in &shuffles {
                    assert_eq!(normalize_rows(s).unwrap().rows(), rep.rows());
                }
                let st = compute_stats(&rep);
                let formula: usize = st
                    .e_row_value
                    .iter()
                    .map(|(&(i, k), &e)| binom(st.c_at(i + 1, k), e))
                    .product();
                assert_eq!(formula, *size);
            }
            if n == 3 {
                let mut sizes: Vec<usize> = fibers.values().copied().collect();
                assert_eq!(sizes.len(), 7);
                sizes.sort_unstable();
                assert_eq!(sizes, vec![1, 1, 1, 1, 1, 1, 2]);
            }
        }
    }
}
