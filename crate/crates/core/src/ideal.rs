//! Order ideals of a [`ColoredPoset`]: exhaustive enumeration in
//! lexicographic order, and a frontier dynamic program for counting.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::Error;
use crate::poly::q::QPolynomial;
use crate::poset::ColoredPoset;

const WORD: usize = 64;

fn words(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A down-closed subset, stored as a bit vector over the canonical element
/// order of its poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderIdeal {
    len: usize,
    bits: Vec<u64>,
    size: usize,
}

impl OrderIdeal {
    pub fn empty(len: usize) -> Self {
        OrderIdeal {
            len,
            bits: vec![0; words(len)],
            size: 0,
        }
    }

    pub fn full(len: usize) -> Self {
        OrderIdeal::from_indices(len, 0..len)
    }

    fn from_bits(len: usize, bits: Vec<u64>) -> Self {
        let size = bits.iter().map(|w| w.count_ones() as usize).sum();
        OrderIdeal { len, bits, size }
    }

    /// The set of the given element indices. Down-closure is not checked;
    /// see [`OrderIdeal::check`].
    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = vec![0u64; words(len)];
        for i in idx {
            assert!(i < len, "element index {i} out of range");
            bits[i / WORD] |= 1 << (i % WORD);
        }
        OrderIdeal::from_bits(len, bits)
    }

    /// Number of elements of the ambient poset.
    pub fn universe(&self) -> usize {
        self.len
    }

    /// Cardinality of the ideal.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.bits[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.contains(i))
    }

    /// Verify down-closure against every colored edge of `p`.
    pub fn check(&self, p: &ColoredPoset) -> Result<(), Error> {
        if self.len != p.len() {
            return Err(Error::InvalidArgument(format!(
                "ideal over {} elements used with a poset of {}",
                self.len,
                p.len()
            )));
        }
        for (t, h) in p.all_edges() {
            if self.contains(h) && !self.contains(t) {
                return Err(Error::NotAnIdeal { tail: t, head: h });
            }
        }
        Ok(())
    }

    /// Hex digits of `Σ_{i in I} 2^i`, most significant first, padded to
    /// one digit per four elements (at least one digit).
    pub fn to_hex(&self) -> String {
        let digits = self.len.div_ceil(4).max(1);
        let mut s = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let word = self.bits.get(d * 4 / WORD).copied().unwrap_or(0);
            let nibble = (word >> (d * 4 % WORD)) & 0xf;
            write!(s, "{nibble:x}").unwrap();
        }
        s
    }

    pub fn from_hex(len: usize, hex: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArgument(format!("bad ideal hex string {hex:?}"));
        let mut bits = vec![0u64; words(len)];
        for (d, ch) in hex.chars().rev().enumerate() {
            let nibble = ch.to_digit(16).ok_or_else(bad)? as u64;
            for b in 0..4 {
                if nibble >> b & 1 == 1 {
                    let i = d * 4 + b;
                    if i >= len {
                        return Err(bad());
                    }
                    bits[i / WORD] |= 1 << (i % WORD);
                }
            }
        }
        Ok(OrderIdeal::from_bits(len, bits))
    }

    pub fn to_json(&self) -> Value {
        json!({ "bits": self.to_hex(), "size": self.size })
    }
}

impl Ord for OrderIdeal {
    /// Lexicographic on the bit sequence `b_0 b_1 ...` with `0 < 1`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.bits.iter().zip(&other.bits) {
                match a.reverse_bits().cmp(&b.reverse_bits()) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for OrderIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn set_bit(v: &mut [u64], i: usize) {
    v[i / WORD] |= 1 << (i % WORD);
}

fn get_bit(v: &[u64], i: usize) -> bool {
    v[i / WORD] >> (i % WORD) & 1 == 1
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

/// Principal down-sets and up-sets (reflexive) as bit vectors.
fn closures(p: &ColoredPoset) -> (Vec<Vec<u64>>, Vec<Vec<u64>>) {
    let order = p
        .linear_extension()
        .expect("order ideals need an acyclic poset");
    let w = words(p.len());
    let preds = p.predecessors();
    let succs = p.successors();
    let mut down = vec![vec![0u64; w]; p.len()];
    for &v in &order {
        let mut d = vec![0u64; w];
        set_bit(&mut d, v);
        for &t in &preds[v] {
            or_into(&mut d, &down[t]);
        }
        down[v] = d;
    }
    let mut up = vec![vec![0u64; w]; p.len()];
    for &v in order.iter().rev() {
        let mut u = vec![0u64; w];
        set_bit(&mut u, v);
        for &h in &succs[v] {
            or_into(&mut u, &up[h]);
        }
        up[v] = u;
    }
    (down, up)
}

struct Walker<'a, F> {
    len: usize,
    down: &'a [Vec<u64>],
    up: &'a [Vec<u64>],
    visit: F,
}

impl<F: FnMut(&OrderIdeal)> Walker<'_, F> {
    /// `inc` is a down-set, `exc` an up-set, disjoint. Elements below
    /// `from` are all decided.
    fn walk(&mut self, from: usize, inc: &[u64], exc: &[u64]) {
        let mut i = from;
        while i < self.len && (get_bit(inc, i) || get_bit(exc, i)) {
            i += 1;
        }
        if i == self.len {
            (self.visit)(&OrderIdeal::from_bits(self.len, inc.to_vec()));
            return;
        }
        let mut exc2 = exc.to_vec();
        or_into(&mut exc2, &self.up[i]);
        self.walk(i + 1, inc, &exc2);
        let mut inc2 = inc.to_vec();
        or_into(&mut inc2, &self.down[i]);
        self.walk(i + 1, &inc2, exc);
    }
}

/// Visit every order ideal of `p` exactly once, in increasing
/// lexicographic order (see the [`Ord`] impl of [`OrderIdeal`]).
///
/// Branches on the smallest undecided element: excluding it excludes its
/// whole up-set, including it includes its down-set. Neither choice can
/// conflict with earlier decisions, so every leaf is an ideal.
pub fn for_each_ideal(p: &ColoredPoset, visit: impl FnMut(&OrderIdeal)) {
    let (down, up) = closures(p);
    let w = words(p.len());
    let mut walker = Walker {
        len: p.len(),
        down: &down,
        up: &up,
        visit,
    };
    walker.walk(0, &vec![0; w], &vec![0; w]);
}

pub fn enumerate_ideals(p: &ColoredPoset) -> Vec<OrderIdeal> {
    let mut out = Vec::new();
    for_each_ideal(p, |i| out.push(i.clone()));
    out
}

/// Count by exhaustive enumeration.
pub fn count_ideals(p: &ColoredPoset) -> BigUint {
    let mut n = 0u64;
    for_each_ideal(p, |_| n += 1);
    BigUint::from(n)
}

/// Rank generating function by exhaustive enumeration: the coefficient of
/// `q^k` counts ideals of size `k`.
pub fn rank_gf(p: &ColoredPoset) -> QPolynomial {
    let mut by_size = vec![0u64; p.len() + 1];
    for_each_ideal(p, |i| by_size[i.size()] += 1);
    QPolynomial::from_coeffs(by_size)
}

/// Frontier dynamic program over a linear extension. The state is the
/// membership of those processed elements that still have an unprocessed
/// successor; each state carries a vector of counts graded by ideal size.
fn frontier_dp(p: &ColoredPoset, graded: bool) -> Vec<BigUint> {
    let order = p
        .linear_extension()
        .expect("order ideals need an acyclic poset");
    let preds = p.predecessors();
    let succs = p.successors();
    let mut pos = vec![0usize; p.len()];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    // retire[k]: elements whose last successor sits at position k
    let mut retire = vec![Vec::new(); p.len()];
    for (v, hs) in succs.iter().enumerate() {
        if let Some(last) = hs.iter().map(|&h| pos[h]).max() {
            retire[last].push(v);
        }
    }
    let w = words(p.len());
    let width = if graded { p.len() + 1 } else { 1 };
    let mut states: HashMap<Box<[u64]>, Vec<BigUint>> = HashMap::new();
    let mut init = vec![BigUint::zero(); width];
    init[0] = BigUint::one();
    states.insert(vec![0u64; w].into_boxed_slice(), init);

    for (k, &v) in order.iter().enumerate() {
        let mut next: HashMap<Box<[u64]>, Vec<BigUint>> = HashMap::with_capacity(states.len() * 2);
        let mut push = |key: Box<[u64]>, counts: Vec<BigUint>| match next.get_mut(&key) {
            Some(acc) => {
                for (a, c) in acc.iter_mut().zip(counts) {
                    *a += c;
                }
            }
            None => {
                next.insert(key, counts);
            }
        };
        let keeps_v = !succs[v].is_empty();
        for (key, counts) in states {
            let allowed = preds[v].iter().all(|&t| get_bit(&key, t));
            let mut without = key.clone();
            for &r in &retire[k] {
                without[r / WORD] &= !(1 << (r % WORD));
            }
            if allowed {
                let mut with = without.clone();
                if keeps_v {
                    set_bit(&mut with, v);
                }
                let shifted = if graded {
                    let mut s = vec![BigUint::zero(); width];
                    s[1..].clone_from_slice(&counts[..width - 1]);
                    s
                } else {
                    counts.clone()
                };
                push(with, shifted);
            }
            push(without, counts);
        }
        states = next;
    }
    let mut total = vec![BigUint::zero(); width];
    for counts in states.into_values() {
        for (t, c) in total.iter_mut().zip(counts) {
            *t += c;
        }
    }
    total
}

/// Count by the frontier dynamic program; agrees with [`count_ideals`] and
/// reaches sizes where enumeration is impractical.
pub fn count_ideals_fast(p: &ColoredPoset) -> BigUint {
    frontier_dp(p, false).swap_remove(0)
}

/// Rank generating function by the frontier dynamic program.
pub fn rank_gf_fast(p: &ColoredPoset) -> QPolynomial {
    QPolynomial::from_coeffs(
        frontier_dp(p, true)
            .into_iter()
            .map(num_bigint::BigInt::from),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::ColorSet;

    fn set(s: &str) -> ColorSet {
        s.parse().unwrap()
    }

    /// Subset-filter oracle: test every subset for down-closure.
    fn brute_force(p: &ColoredPoset) -> Vec<OrderIdeal> {
        assert!(p.len() <= 20);
        let edges = p.all_edges();
        let mut out: Vec<OrderIdeal> = (0u32..1 << p.len())
            .filter(|m| {
                edges
                    .iter()
                    .all(|&(t, h)| m >> h & 1 == 0 || m >> t & 1 == 1)
            })
            .map(|m| OrderIdeal::from_indices(p.len(), (0..p.len()).filter(|&i| m >> i & 1 == 1)))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn empty_poset() {
        let p = ColoredPoset::build_tetra(1);
        let all = enumerate_ideals(&p);
        assert_eq!(all, vec![OrderIdeal::empty(0)]);
        assert_eq!(count_ideals_fast(&p), BigUint::one());
        assert_eq!(rank_gf(&p), QPolynomial::one());
    }

    #[test]
    fn matches_subset_filter_and_is_sorted() {
        for n in 1..=4 {
            for s in ColorSet::all_subsets() {
                let p = ColoredPoset::tetra(n, s);
                let got = enumerate_ideals(&p);
                assert!(got.windows(2).all(|w| w[0] < w[1]), "order {s} n={n}");
                assert_eq!(got, brute_force(&p), "{s} n={n}");
                for i in &got {
                    i.check(&p).unwrap();
                }
                assert_eq!(count_ideals_fast(&p), BigUint::from(got.len()));
                assert_eq!(rank_gf_fast(&p), rank_gf(&p));
            }
        }
    }

    #[test]
    fn known_small_counts() {
        assert_eq!(
            count_ideals(&ColoredPoset::tetra(3, set("byog"))),
            BigUint::from(7u32)
        );
        let p4 = ColoredPoset::build_pyramid(4).restrict(set("bg"));
        assert_eq!(count_ideals(&p4), BigUint::from(14u32));
        assert_eq!(
            rank_gf(&p4),
            QPolynomial::from_coeffs([1, 3, 3, 3, 2, 1, 1])
        );
        let p = ColoredPoset::build_pyramid(4);
        assert_eq!(rank_gf(&p), QPolynomial::from_coeffs([1, 1, 1, 2, 1, 1, 1]));
        assert_eq!(
            rank_gf(&ColoredPoset::tetra(3, ColorSet::EMPTY)),
            QPolynomial::from_coeffs([1, 4, 6, 4, 1])
        );
    }

    #[test]
    fn hex_round_trip() {
        let i = OrderIdeal::from_indices(10, [0, 3, 9]);
        assert_eq!(i.to_hex(), "209");
        assert_eq!(OrderIdeal::from_hex(10, "209").unwrap(), i);
        assert_eq!(OrderIdeal::empty(0).to_hex(), "0");
        let big = OrderIdeal::from_indices(70, [0, 65, 69]);
        assert_eq!(OrderIdeal::from_hex(70, &big.to_hex()).unwrap(), big);
        assert!(OrderIdeal::from_hex(3, "f").is_err());
        assert_eq!(i.to_json(), json!({"bits": "209", "size": 3}));
    }

    #[test]
    fn check_reports_violation() {
        let p = ColoredPoset::build_pyramid(3);
        let bad = OrderIdeal::full(3);
        assert!(bad.check(&p).is_ok());
        let (t, h) = p.all_edges()[0];
        let only_head = OrderIdeal::from_indices(3, [h]);
        assert_eq!(
            only_head.check(&p),
            Err(Error::NotAnIdeal { tail: t, head: h })
        );
    }
}
