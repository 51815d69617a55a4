//! Colored Hasse diagrams of `P_n`, `T_n` and the trapezoids `T_n^k`.
//!
//! Elements are integer coordinates `(c1, c2, c3)` over the generators
//! r, g, y. The partial order is reachability along colored edges.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::color::{Color, ColorSet};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coord {
    pub c1: u32,
    pub c2: u32,
    pub c3: u32,
}

impl Coord {
    pub fn new(c1: u32, c2: u32, c3: u32) -> Coord {
        Coord { c1, c2, c3 }
    }

    pub fn sum(self) -> u32 {
        self.c1 + self.c2 + self.c3
    }

    fn canonical_key(self) -> (u32, u32, u32) {
        (self.sum(), self.c1, self.c2)
    }

    /// The head of the edge of color `c` leaving `self`, if it has
    /// non-negative coordinates.
    pub fn step(self, c: Color) -> Option<Coord> {
        let d = c.step();
        let add = |x: u32, dx: i32| u32::try_from(x as i64 + dx as i64).ok();
        Some(Coord::new(
            add(self.c1, d[0])?,
            add(self.c2, d[1])?,
            add(self.c3, d[2])?,
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PosetKind {
    Pyramid,
    Tetra,
    Trapezoid(usize),
}

impl PosetKind {
    fn to_json(self) -> Value {
        match self {
            PosetKind::Pyramid => json!("pyramid"),
            PosetKind::Tetra => json!("tetra"),
            PosetKind::Trapezoid(k) => json!({ "trapezoid": k }),
        }
    }
}

/// An explicit colored DAG. Immutable once built.
#[derive(Clone, Debug)]
pub struct ColoredPoset {
    n: usize,
    kind: PosetKind,
    dual: bool,
    elements: Vec<Coord>,
    index: HashMap<Coord, usize>,
    edges: [Vec<(usize, usize)>; 6],
}

impl PartialEq for ColoredPoset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.kind == other.kind
            && self.dual == other.dual
            && self.elements == other.elements
            && self.edges == other.edges
    }
}

impl Eq for ColoredPoset {}

fn simplex(n: usize, with_c3: bool) -> Vec<Coord> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let top = (n - 2) as u32;
    for c1 in 0..=top {
        for c2 in 0..=top - c1 {
            let c3_max = if with_c3 { top - c1 - c2 } else { 0 };
            for c3 in 0..=c3_max {
                out.push(Coord::new(c1, c2, c3));
            }
        }
    }
    out.sort_by_key(|c| c.canonical_key());
    out
}

impl ColoredPoset {
    fn from_elements(n: usize, kind: PosetKind, elements: Vec<Coord>, colors: ColorSet) -> Self {
        let index: HashMap<Coord, usize> =
            elements.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut edges: [Vec<(usize, usize)>; 6] = Default::default();
        for c in colors.iter() {
            let list = &mut edges[c.index()];
            for (t, &e) in elements.iter().enumerate() {
                if let Some(h) = e.step(c).and_then(|h| index.get(&h)) {
                    list.push((t, *h));
                }
            }
        }
        ColoredPoset {
            n,
            kind,
            dual: false,
            elements,
            index,
            edges,
        }
    }

    /// `T_n` with all six colors. `n = 1` is the empty poset.
    pub fn build_tetra(n: usize) -> ColoredPoset {
        assert!(n >= 1, "n must be at least 1");
        ColoredPoset::from_elements(n, PosetKind::Tetra, simplex(n, true), ColorSet::ALL)
    }

    /// `P_n` with colors r, g, b.
    pub fn build_pyramid(n: usize) -> ColoredPoset {
        assert!(n >= 1, "n must be at least 1");
        let rgb = ColorSet::of(&[Color::Red, Color::Green, Color::Blue]);
        ColoredPoset::from_elements(n, PosetKind::Pyramid, simplex(n, false), rgb)
    }

    /// Convenience for `build_tetra(n).restrict(s)`.
    pub fn tetra(n: usize, s: ColorSet) -> ColoredPoset {
        ColoredPoset::build_tetra(n).restrict(s)
    }

    /// Same elements, only edges whose color lies in `s`.
    pub fn restrict(&self, s: ColorSet) -> ColoredPoset {
        let mut out = self.clone();
        for c in Color::ALL {
            if !s.contains(c) {
                out.edges[c.index()].clear();
            }
        }
        out
    }

    /// Every edge reversed.
    pub fn dual(&self) -> ColoredPoset {
        let mut out = self.clone();
        out.dual = !self.dual;
        for list in out.edges.iter_mut() {
            for e in list.iter_mut() {
                *e = (e.1, e.0);
            }
            list.sort_unstable();
        }
        out
    }

    /// Remove the layers `P_2, ..., P_{k+1}` (the elements with
    /// `c3 > n - 2 - k`) together with their edges.
    pub fn truncate_trapezoid(&self, k: usize) -> Result<ColoredPoset, Error> {
        if self.kind != PosetKind::Tetra {
            return Err(Error::InvalidArgument(
                "trapezoids are cut from a tetrahedral poset".into(),
            ));
        }
        if k >= self.n.max(1) {
            return Err(Error::InvalidArgument(format!(
                "trapezoid parameter k = {k} must satisfy 0 <= k <= {}",
                self.n - 1
            )));
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let keep = |c: &Coord| (c.c3 as usize) + k + 2 <= self.n;
        let remap: Vec<Option<usize>> = {
            let mut next = 0;
            self.elements
                .iter()
                .map(|c| {
                    keep(c).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let elements: Vec<Coord> = self.elements.iter().copied().filter(keep).collect();
        let index = elements.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut edges: [Vec<(usize, usize)>; 6] = Default::default();
        for (dst, src) in edges.iter_mut().zip(self.edges.iter()) {
            *dst = src
                .iter()
                .filter_map(|&(t, h)| Some((remap[t]?, remap[h]?)))
                .collect();
        }
        Ok(ColoredPoset {
            n: self.n,
            kind: PosetKind::Trapezoid(k),
            dual: self.dual,
            elements,
            index,
            edges,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Coord] {
        &self.elements
    }

    pub fn index_of(&self, c: Coord) -> Option<usize> {
        self.index.get(&c).copied()
    }

    pub fn edges(&self, c: Color) -> &[(usize, usize)] {
        &self.edges[c.index()]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Colors that carry at least one edge.
    pub fn colors(&self) -> ColorSet {
        Color::ALL
            .into_iter()
            .filter(|c| !self.edges[c.index()].is_empty())
            .fold(ColorSet::EMPTY, ColorSet::with)
    }

    /// All `(tail, head)` pairs over every color, deduplicated and sorted.
    pub fn all_edges(&self) -> Vec<(usize, usize)> {
        let mut all: Vec<_> = self.edges.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// For each element, the tails of edges pointing into it.
    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut preds = vec![Vec::new(); self.len()];
        for (t, h) in self.all_edges() {
            preds[h].push(t);
        }
        preds
    }

    /// For each element, the heads of edges leaving it.
    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.len()];
        for (t, h) in self.all_edges() {
            succ[t].push(h);
        }
        succ
    }

    /// A linear extension (Kahn's algorithm, smallest index first), or
    /// `None` if the edge digraph has a cycle.
    pub fn linear_extension(&self) -> Option<Vec<usize>> {
        let succ = self.successors();
        let mut indeg = vec![0usize; self.len()];
        for s in &succ {
            for &h in s {
                indeg[h] += 1;
            }
        }
        let mut ready: std::collections::BTreeSet<usize> =
            (0..self.len()).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &h in &succ[v] {
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    ready.insert(h);
                }
            }
        }
        (order.len() == self.len()).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.linear_extension().is_some()
    }

    pub fn to_json(&self) -> Value {
        let mut edges = Map::new();
        for c in Color::ALL {
            if !self.edges[c.index()].is_empty() {
                let list: Vec<[usize; 2]> =
                    self.edges[c.index()].iter().map(|&(t, h)| [t, h]).collect();
                edges.insert(c.name().to_string(), json!(list));
            }
        }
        let elements: Vec<[u32; 3]> = self.elements.iter().map(|c| [c.c1, c.c2, c.c3]).collect();
        let mut obj = Map::new();
        obj.insert("n".into(), json!(self.n));
        obj.insert("kind".into(), self.kind.to_json());
        if self.dual {
            obj.insert("dual".into(), json!(true));
        }
        obj.insert("elements".into(), json!(elements));
        obj.insert("edges".into(), Value::Object(edges));
        Value::Object(obj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn set(s: &str) -> ColorSet {
        s.parse().unwrap()
    }

    /// Sizes of weakly connected components, sorted.
    fn component_sizes(p: &ColoredPoset) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..p.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for (t, h) in p.all_edges() {
            let (a, b) = (find(&mut parent, t), find(&mut parent, h));
            parent[a] = b;
        }
        let mut sizes = HashMap::new();
        for i in 0..p.len() {
            *sizes.entry(find(&mut parent, i)).or_insert(0) += 1;
        }
        let mut v: Vec<usize> = sizes.into_values().collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn tetra_small() {
        let t1 = ColoredPoset::build_tetra(1);
        assert_eq!((t1.len(), t1.edge_count()), (0, 0));
        let t3 = ColoredPoset::build_tetra(3);
        assert_eq!(t3.len(), 4);
        for c in Color::ALL {
            assert_eq!(t3.edges(c).len(), 1, "{c}");
        }
    }

    #[test]
    fn counts_match_closed_forms() {
        for n in 1..=7 {
            let t = ColoredPoset::build_tetra(n);
            assert_eq!(t.len(), binom(n + 1, 3));
            for c in Color::ALL {
                assert_eq!(t.edges(c).len(), binom(n, 3));
            }
            let p = ColoredPoset::build_pyramid(n);
            assert_eq!(p.len(), binom(n, 2));
            assert_eq!(p.edge_count(), 3 * binom(n - 1, 2));
            for s in ColorSet::all_subsets() {
                assert!(t.restrict(s).is_acyclic());
            }
        }
        assert_eq!(ColoredPoset::build_pyramid(4).edge_count(), 9);
        assert_eq!(ColoredPoset::build_pyramid(5).len(), 10);
        assert_eq!(ColoredPoset::build_pyramid(5).edge_count(), 18);
    }

    #[test]
    fn rgb_layers_are_pyramids() {
        let t4 = ColoredPoset::build_tetra(4).restrict(set("rgb"));
        assert_eq!(component_sizes(&t4), vec![1, 3, 6]);
        for n in 2..=6 {
            let t = ColoredPoset::build_tetra(n).restrict(set("bg"));
            let mut expect: Vec<usize> = (2..=n).map(|j| binom(j, 2)).collect();
            expect.sort_unstable();
            assert_eq!(component_sizes(&t), expect);
        }
    }

    #[test]
    fn restriction_and_dual() {
        let p = ColoredPoset::build_pyramid(4).restrict(set("bg"));
        assert_eq!((p.len(), p.edge_count()), (6, 6));
        assert_eq!(ColoredPoset::tetra(4, ColorSet::EMPTY).edge_count(), 0);
        let d = p.dual();
        assert_ne!(d, p);
        assert_eq!(d.dual(), p);
        for (t, h) in p.edges(Color::Green) {
            assert!(d.edges(Color::Green).contains(&(*h, *t)));
        }
    }

    #[test]
    fn trapezoid_layers() {
        let t4 = ColoredPoset::build_tetra(4);
        assert_eq!(t4.truncate_trapezoid(0).unwrap(), t4);
        let tr = t4.truncate_trapezoid(2).unwrap();
        assert_eq!(tr.len(), 6);
        assert!(tr.elements().iter().all(|c| c.c3 == 0));
        assert_eq!(t4.truncate_trapezoid(3).unwrap().len(), 0);
        assert!(t4.truncate_trapezoid(4).is_err());
        assert!(ColoredPoset::build_pyramid(4)
            .truncate_trapezoid(1)
            .is_err());
        let t5 = ColoredPoset::build_tetra(5).truncate_trapezoid(1).unwrap();
        assert_eq!(t5.len(), 10 + 6 + 3);
        assert!(t5.is_acyclic());
    }

    #[test]
    fn json_shape() {
        let v = ColoredPoset::build_tetra(3).to_json();
        assert_eq!(v["n"], 3);
        assert_eq!(v["kind"], "tetra");
        assert_eq!(v["elements"][0], json!([0, 0, 0]));
        let keys: Vec<&String> = v["edges"].as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 6);
        let tr = ColoredPoset::build_tetra(4).truncate_trapezoid(1).unwrap();
        assert_eq!(tr.to_json()["kind"], json!({"trapezoid": 1}));
    }
}
