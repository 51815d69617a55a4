#![allow(dead_code)]

use tetraposet::{ColorSet, QPolynomial};

/// Ideal sizes of `T_n(S)` (or its dual) cut to `c3 ≤ top`, tallied by an
/// include/exclude search over the coordinates. `2c1 + 4c2 + 3c3` increases along every move.
pub fn oracle_gf_capped(n: usize, s: ColorSet, dual: bool, top: i32) -> QPolynomial {
    let m = n as i32 - 2;
    let mut pts = Vec::new();
    for a in 0..=m.max(-1) {
        for b in 0..=m - a {
            for c in 0..=(m - a - b).min(top) {
                pts.push([a, b, c]);
            }
        }
    }
    pts.sort_by_key(|p| 2 * p[0] + 4 * p[1] + 3 * p[2]);
    if dual {
        pts.reverse();
    }
    let idx = |p: [i32; 3]| pts.iter().position(|&q| q == p);
    let mut needs: Vec<Vec<usize>> = vec![Vec::new(); pts.len()];
    for (t, &p) in pts.iter().enumerate() {
        for c in s.iter() {
            let d = c.step();
            let h = [p[0] + d[0], p[1] + d[1], p[2] + d[2]];
            if let Some(h) = idx(h) {
                if dual {
                    needs[t].push(h);
                } else {
                    needs[h].push(t);
                }
            }
        }
    }
    fn go(
        k: usize,
        chosen: &mut Vec<bool>,
        size: usize,
        needs: &[Vec<usize>],
        tally: &mut Vec<u64>,
    ) {
        if k == needs.len() {
            tally[size] += 1;
            return;
        }
        chosen.push(false);
        go(k + 1, chosen, size, needs, tally);
        chosen.pop();
        if needs[k].iter().all(|&j| chosen[j]) {
            chosen.push(true);
            go(k + 1, chosen, size + 1, needs, tally);
            chosen.pop();
        }
    }
    let mut tally = vec![0u64; pts.len() + 1];
    go(0, &mut Vec::new(), 0, &needs, &mut tally);
    QPolynomial::from_coeffs(tally)
}

pub fn oracle_gf(n: usize, s: ColorSet, dual: bool) -> QPolynomial {
    oracle_gf_capped(n, s, dual, i32::MAX)
}
