//! Tournaments on `1..=n` and the arrays `Y_n⁺({b,r,(g)})`.
//!
//! Each entry off column 0 either equals its southwest neighbor (an upset
//! between `i` and `i+j`) or is one less.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::color::{Color, ColorSet};
use crate::error::Error;
use crate::staircase::{StaircaseArray, Variant};

/// `{b, r}` together with the green they imply.
pub fn tournament_colors() -> ColorSet {
    ColorSet::of(&[Color::Red, Color::Blue, Color::Green])
}

/// `{b, r, g, y}`: the tournament arrays with weakly increasing rows.
pub fn tsscpp_tournament_colors() -> ColorSet {
    tournament_colors().with(Color::Yellow)
}

/// A tournament recorded by its upsets: `(i, j)` with `i < j` means `j`
/// beat `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tournament {
    n: usize,
    upsets: BTreeSet<(usize, usize)>,
}

impl Tournament {
    pub fn new(n: usize, upsets: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, Error> {
        let upsets: BTreeSet<_> = upsets.into_iter().collect();
        for &(i, j) in &upsets {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::invalid(
                    "tournament",
                    format!("upset ({i},{j}) needs 1 <= i < j <= {n}"),
                ));
            }
        }
        Ok(Tournament { n, upsets })
    }

    pub fn transitive(n: usize) -> Self {
        Tournament {
            n,
            upsets: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn upsets(&self) -> &BTreeSet<(usize, usize)> {
        &self.upsets
    }

    pub fn is_upset(&self, i: usize, j: usize) -> bool {
        self.upsets.contains(&(i.min(j), i.max(j)))
    }

    /// Wins of each vertex, 1-based slot `k − 1`.
    pub fn wins(&self) -> Vec<u32> {
        let mut w = vec![0u32; self.n];
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                let winner = if self.is_upset(i, j) { j } else { i };
                w[winner - 1] += 1;
            }
        }
        w
    }

    /// Upsets between `w` and the vertices of `lo..=hi`.
    pub fn upsets_against(&self, w: usize, lo: usize, hi: usize) -> usize {
        (lo..=hi).filter(|&k| k != w && self.is_upset(k, w)).count()
    }

    /// All `2^{C(n,2)}` tournaments, ordered by the bit pattern over pairs
    /// in lexicographic order.
    pub fn all(n: usize) -> Vec<Tournament> {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        (0u64..1 << pairs.len())
            .map(|mask| Tournament {
                n,
                upsets: pairs
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect(),
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!(self.upsets.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>())
    }

    /// An upset list `[[i, j], ...]`; pairs may be given in either order.
    pub fn from_json(n: usize, v: &Value) -> Result<Self, Error> {
        let pairs: Vec<[usize; 2]> = serde_json::from_value(v.clone())
            .map_err(|e| Error::invalid("tournament", format!("expected an upset list: {e}")))?;
        Tournament::new(n, pairs.into_iter().map(|[a, b]| (a.min(b), a.max(b))))
    }
}

/// Fill by increasing `j`: `α_{i,j} = α_{i+1,j−1}` on an upset between `i`
/// and `i+j`, else one less.
pub fn tournament_to_yplus(t: &Tournament) -> StaircaseArray {
    let n = t.n();
    let mut a = StaircaseArray::minimal(n, Variant::Yplus);
    for j in 1..n {
        for i in 1..=n - j {
            let sw = a.get(i + 1, j - 1).unwrap();
            a.set(i, j, if t.is_upset(i, i + j) { sw } else { sw - 1 });
        }
    }
    a.with_colors(tournament_colors())
}

pub fn yplus_to_tournament(a: &StaircaseArray) -> Result<Tournament, Error> {
    if a.variant() != Variant::Yplus {
        return Err(Error::invalid("staircase array", "expected a Yplus array"));
    }
    a.check(tournament_colors())?;
    let upsets = a
        .cells()
        .filter(|&(i, j)| a.get(i, j) == a.get(i + 1, j - 1))
        .map(|(i, j)| (i, i + j));
    Tournament::new(a.n(), upsets)
}

/// Whether every vertex `v − 1` has at most as many upsets in
/// `u..=v−2` as `v` has in `u..=v−1`.
pub fn is_tsscpp_tournament(t: &Tournament) -> bool {
    let n = t.n();
    (1..=n).all(|v| {
        (1..v.saturating_sub(1))
            .all(|u| t.upsets_against(v - 1, u, v - 2) <= t.upsets_against(v, u, v - 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(a: &StaircaseArray) -> Vec<Vec<u32>> {
        a.rows().to_vec()
    }

    #[test]
    fn order_three_pairs() {
        type Case = (Vec<(usize, usize)>, Vec<Vec<u32>>);
        let cases: Vec<Case> = vec![
            (vec![], vec![vec![1, 1, 1], vec![2, 2], vec![3]]),
            (vec![(1, 3)], vec![vec![1, 1, 2], vec![2, 2], vec![3]]),
            (vec![(2, 3)], vec![vec![1, 1, 2], vec![2, 3], vec![3]]),
            (
                vec![(1, 3), (2, 3)],
                vec![vec![1, 1, 3], vec![2, 3], vec![3]],
            ),
            (vec![(1, 2)], vec![vec![1, 2, 1], vec![2, 2], vec![3]]),
            (
                vec![(1, 2), (1, 3)],
                vec![vec![1, 2, 2], vec![2, 2], vec![3]],
            ),
            (
                vec![(1, 2), (2, 3)],
                vec![vec![1, 2, 2], vec![2, 3], vec![3]],
            ),
            (
                vec![(1, 2), (1, 3), (2, 3)],
                vec![vec![1, 2, 3], vec![2, 3], vec![3]],
            ),
        ];
        for (ups, want) in cases {
            let t = Tournament::new(3, ups).unwrap();
            let a = tournament_to_yplus(&t);
            assert_eq!(rows(&a), want);
            assert_eq!(yplus_to_tournament(&a).unwrap(), t);
        }
    }

    #[test]
    fn every_blue_red_array_is_hit() {
        for n in 1..=5 {
            let all = Tournament::all(n);
            assert_eq!(all.len(), 1 << (n * (n - 1) / 2));
            let images: BTreeSet<Vec<Vec<u32>>> = all
                .iter()
                .map(|t| {
                    let a = tournament_to_yplus(t);
                    assert!(a.validate(tournament_colors()));
                    rows(&a)
                })
                .collect();
            assert_eq!(images.len(), all.len());
        }
    }

    #[test]
    fn tsscpp_condition_matches_yellow() {
        for n in 1..=5 {
            for t in Tournament::all(n) {
                let yellow = tournament_to_yplus(&t).validate(tsscpp_tournament_colors());
                assert_eq!(is_tsscpp_tournament(&t), yellow, "{t:?}");
            }
        }
        let pass = Tournament::all(3)
            .iter()
            .filter(|t| is_tsscpp_tournament(t))
            .count();
        assert_eq!(pass, 7);
        assert!(!is_tsscpp_tournament(
            &Tournament::new(3, [(1, 2)]).unwrap()
        ));
        assert!(is_tsscpp_tournament(&Tournament::transitive(4)));
    }

    #[test]
    fn wins_and_json() {
        let t = Tournament::new(3, [(1, 3)]).unwrap();
        assert_eq!(t.wins(), vec![1, 1, 1]);
        assert_eq!(Tournament::transitive(3).wins(), vec![2, 1, 0]);
        assert_eq!(Tournament::from_json(3, &t.to_json()).unwrap(), t);
        assert_eq!(Tournament::from_json(3, &json!([[3, 1]])).unwrap(), t);
        assert!(Tournament::new(3, [(2, 4)]).is_err());
    }
}
