//! Dyck paths and the order ideals of `P_n({b,g})`.
//!
//! The `k`-th up step of a path starts at height `s_k`. Column `p` of the
//! pyramid holds the elements `(p, q, 0)` with `q < s_{n−p}`, so the ideal
//! size is the area `Σ s_k`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::ideal::OrderIdeal;
use crate::poly::q::QPolynomial;
use crate::poset::{ColoredPoset, Coord, PosetKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    /// `true` for an up step.
    steps: Vec<bool>,
}

impl DyckPath {
    pub fn new(steps: Vec<bool>) -> Result<Self, Error> {
        let mut h = 0i64;
        for (k, &up) in steps.iter().enumerate() {
            h += if up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::invalid(
                    "Dyck path",
                    format!("goes below the axis at step {}", k + 1),
                ));
            }
        }
        if h != 0 {
            return Err(Error::invalid(
                "Dyck path",
                "unbalanced: ends above the axis",
            ));
        }
        Ok(DyckPath { steps })
    }

    /// `(UD)^n`.
    pub fn zigzag(n: usize) -> Self {
        DyckPath {
            steps: (0..2 * n).map(|k| k % 2 == 0).collect(),
        }
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    /// Start heights of the up steps, in order.
    pub fn up_heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        let mut out = Vec::with_capacity(self.semilength());
        for &up in &self.steps {
            if up {
                out.push(h);
                h += 1;
            } else {
                h -= 1;
            }
        }
        out
    }

    pub fn area(&self) -> usize {
        self.up_heights().iter().sum()
    }

    fn from_up_heights(s: &[usize]) -> Result<Self, Error> {
        let mut steps = Vec::with_capacity(2 * s.len());
        for (k, &h) in s.iter().enumerate() {
            let next = s.get(k + 1).copied().unwrap_or(0);
            if next > h + 1 {
                return Err(Error::invalid(
                    "Dyck path",
                    "up-step heights jump by more than one",
                ));
            }
            steps.push(true);
            steps.extend(std::iter::repeat_n(false, h + 1 - next));
        }
        DyckPath::new(steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &up in &self.steps {
            f.write_str(if up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(true),
                'D' => Ok(false),
                other => Err(Error::invalid(
                    "Dyck path",
                    format!("unexpected step {other:?}"),
                )),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckPath::new(steps)
    }
}

fn require_pyramid(p: &ColoredPoset, n: usize) -> Result<(), Error> {
    if p.kind() != PosetKind::Pyramid || p.is_dual() || p.n() != n {
        return Err(Error::InvalidArgument(format!(
            "Dyck paths of semilength {n} encode ideals of P_{n}"
        )));
    }
    Ok(())
}

pub fn dyck_to_ideal(d: &DyckPath, p: &ColoredPoset) -> Result<OrderIdeal, Error> {
    let n = d.semilength();
    require_pyramid(p, n)?;
    let s = d.up_heights();
    let mut members = Vec::new();
    for col in 0..n.saturating_sub(1) {
        for q in 0..s[n - 1 - col] {
            let c = Coord::new(col as u32, q as u32, 0);
            members.push(p.index_of(c).expect("element below the path lies in P_n"));
        }
    }
    Ok(OrderIdeal::from_indices(p.len(), members))
}

/// Inverse of [`dyck_to_ideal`]; rejects sets that are not ideals of
/// `P_n({b,g})`.
pub fn ideal_to_dyck(ideal: &OrderIdeal, p: &ColoredPoset) -> Result<DyckPath, Error> {
    let n = p.n();
    require_pyramid(p, n)?;
    let bad = || Error::invalid("Dyck ideal", "not an order ideal of P_n({b,g})");
    let mut h = vec![0usize; n.saturating_sub(1)];
    for k in ideal.indices() {
        h[p.elements()[k].c1 as usize] += 1;
    }
    let mut s = vec![0usize; n];
    for (col, &v) in h.iter().enumerate() {
        s[n - 1 - col] = v;
    }
    let d = DyckPath::from_up_heights(&s).map_err(|_| bad())?;
    if dyck_to_ideal(&d, p)? != *ideal {
        return Err(bad());
    }
    Ok(d)
}

/// All Dyck paths of semilength `n`, in lexicographic order with `U < D`.
pub fn all_dyck_paths(n: usize) -> Vec<DyckPath> {
    fn rec(up: usize, down: usize, n: usize, cur: &mut Vec<bool>, out: &mut Vec<DyckPath>) {
        if down == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if up < n {
            cur.push(true);
            rec(up + 1, down, n, cur, out);
            cur.pop();
        }
        if down < up {
            cur.push(false);
            rec(up, down + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, n, &mut Vec::new(), &mut out);
    out
}

/// `Σ q^{area}` over Dyck paths of semilength `n`.
pub fn area_gf(n: usize) -> QPolynomial {
    all_dyck_paths(n)
        .iter()
        .map(|d| QPolynomial::monomial(d.area()))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::{Color, ColorSet};
    use crate::ideal::enumerate_ideals;
    use std::collections::HashSet;

    fn bg_pyramid(n: usize) -> ColoredPoset {
        ColoredPoset::build_pyramid(n).restrict(ColorSet::of(&[Color::Blue, Color::Green]))
    }

    #[test]
    fn parse_and_reject() {
        assert_eq!("UUDD".parse::<DyckPath>().unwrap().to_string(), "UUDD");
        assert!("UDDU".parse::<DyckPath>().is_err());
        assert!("UUD".parse::<DyckPath>().is_err());
        assert!("UXD".parse::<DyckPath>().is_err());
    }

    #[test]
    fn areas() {
        assert_eq!("UUUDDUDD".parse::<DyckPath>().unwrap().area(), 4);
        assert_eq!("UUDUUDDD".parse::<DyckPath>().unwrap().area(), 4);
        assert_eq!("UUDUDUDD".parse::<DyckPath>().unwrap().area(), 3);
        assert_eq!(DyckPath::zigzag(4).area(), 0);
    }

    #[test]
    fn zigzag_is_empty_ideal() {
        let p = bg_pyramid(4);
        assert_eq!(dyck_to_ideal(&DyckPath::zigzag(4), &p).unwrap().size(), 0);
    }

    #[test]
    fn bijection_small_n() {
        let catalan = [1, 1, 2, 5, 14, 42];
        for (n, &cat) in catalan.iter().enumerate().skip(1) {
            let p = bg_pyramid(n);
            let paths = all_dyck_paths(n);
            assert_eq!(paths.len(), cat);
            let ideals: HashSet<OrderIdeal> = enumerate_ideals(&p).into_iter().collect();
            assert_eq!(ideals.len(), paths.len());
            for d in &paths {
                let i = dyck_to_ideal(d, &p).unwrap();
                assert!(ideals.contains(&i));
                assert_eq!(i.size(), d.area());
                assert_eq!(&ideal_to_dyck(&i, &p).unwrap(), d);
            }
        }
    }

    #[test]
    fn c4_area_polynomial() {
        let expected = QPolynomial::from_coeffs([1, 3, 3, 3, 2, 1, 1]);
        assert_eq!(area_gf(4), expected);
    }

    #[test]
    fn non_ideal_rejected() {
        let p = bg_pyramid(3);
        let top = p.index_of(Coord::new(0, 1, 0)).unwrap();
        assert!(ideal_to_dyck(&OrderIdeal::from_indices(p.len(), [top]), &p).is_err());
    }
}
