//! Staircase arrays `X_n(S)`, `Y_n(S)`, `Y_n⁺(S)` and their weight-preserving
//! bijections with order ideals of `T_n(S)`.
//!
//! Cell `(i, j)` of an X array counts how many elements of the green chain
//! `{(i-1, c2, n-i-j) : 0 <= c2 < j}` lie in the ideal.

use std::fmt;

use serde_json::{json, Value};

use crate::color::{Color, ColorSet};
use crate::error::Error;
use crate::ideal::OrderIdeal;
use crate::poset::{ColoredPoset, Coord, PosetKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    X,
    Y,
    Yplus,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::X => "X",
            Variant::Y => "Y",
            Variant::Yplus => "Yplus",
        }
    }

    pub fn from_name(s: &str) -> Option<Variant> {
        match s {
            "X" | "x" => Some(Variant::X),
            "Y" | "y" => Some(Variant::Y),
            "Yplus" | "yplus" | "Y+" => Some(Variant::Yplus),
            _ => None,
        }
    }
}

/// A staircase-shaped array. Rows are 1-based in the accessors. X and Y
/// arrays have rows `1..n-1` with row `i` holding columns `1..=n-i`; Yplus
/// arrays have rows `1..=n` holding columns `0..=n-i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseArray {
    n: usize,
    variant: Variant,
    rows: Vec<Vec<u32>>,
    colors: Option<ColorSet>,
}

/// The first inequality found to fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// `None` for a bound or column-0 violation.
    pub color: Option<Color>,
    pub cell: (usize, usize),
    pub other: Option<(usize, usize)>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Error {
        Error::Violation(v.message)
    }
}

impl StaircaseArray {
    /// Builds an array after checking the staircase shape.
    pub fn new(n: usize, variant: Variant, rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let (count, first) = match variant {
            Variant::X | Variant::Y => (n.saturating_sub(1), 0),
            Variant::Yplus => (n, 1),
        };
        let shape_err = || {
            Error::invalid(
                "staircase array",
                format!(
                    "rows do not form a {} staircase for n = {n}",
                    variant.name()
                ),
            )
        };
        if n == 0 || rows.len() != count {
            return Err(shape_err());
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n - (k + 1) + first {
                return Err(shape_err());
            }
        }
        Ok(StaircaseArray {
            n,
            variant,
            rows,
            colors: None,
        })
    }

    /// Builds an array from a function of `(i, j)`, `j >= 1`, filling
    /// column 0 of a Yplus array with `i`.
    pub fn from_fn(n: usize, variant: Variant, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let rows = match variant {
            Variant::X | Variant::Y => (1..n)
                .map(|i| (1..=n - i).map(|j| f(i, j)).collect())
                .collect(),
            Variant::Yplus => (1..=n)
                .map(|i| {
                    std::iter::once(i as u32)
                        .chain((1..=n - i).map(|j| f(i, j)))
                        .collect()
                })
                .collect(),
        };
        StaircaseArray {
            n,
            variant,
            rows,
            colors: None,
        }
    }

    /// The all-minimal array (every entry at its lower bound).
    pub fn minimal(n: usize, variant: Variant) -> Self {
        StaircaseArray::from_fn(n, variant, |i, _| match variant {
            Variant::X => 0,
            _ => i as u32,
        })
    }

    pub fn with_colors(mut self, s: ColorSet) -> Self {
        self.colors = Some(s);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn colors(&self) -> Option<ColorSet> {
        self.colors
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at 1-based row `i`, column `j` (column 0 only for Yplus).
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        if i == 0 {
            return None;
        }
        let offset = match self.variant {
            Variant::Yplus => 0,
            _ => {
                if j == 0 {
                    return None;
                }
                1
            }
        };
        self.rows.get(i - 1)?.get(j - offset).copied()
    }

    /// Overwrite an existing entry.
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let offset = usize::from(self.variant != Variant::Yplus);
        self.rows[i - 1][j - offset] = v;
    }

    /// Cells `(i, j)` with `j >= 1`, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..n).flat_map(move |i| (1..=n - i).map(move |j| (i, j)))
    }

    /// Σ x over an X array, Σ (y − i) over Y and Yplus (column 0 excluded).
    pub fn weight(&self) -> u64 {
        self.cells()
            .map(|(i, j)| {
                let v = self.get(i, j).unwrap() as i64;
                let off = if self.variant == Variant::X {
                    0
                } else {
                    i as i64
                };
                (v - off) as u64
            })
            .sum()
    }

    /// Check bounds, column 0, and every inequality for the colors in `s`.
    /// Inequalities that mention a missing cell (or column 0) are vacuous.
    pub fn check(&self, s: ColorSet) -> Result<(), Violation> {
        let x_like = self.variant == Variant::X;
        if self.variant == Variant::Yplus {
            for i in 1..=self.n {
                if self.get(i, 0) != Some(i as u32) {
                    return Err(Violation {
                        color: None,
                        cell: (i, 0),
                        other: None,
                        message: format!("column 0 entry at row {i} must equal {i}"),
                    });
                }
            }
        }
        for (i, j) in self.cells() {
            let v = self.get(i, j).unwrap() as i64;
            let (lo, hi) = if x_like {
                (0, j as i64)
            } else {
                (i as i64, (i + j) as i64)
            };
            if v < lo || v > hi {
                return Err(Violation {
                    color: None,
                    cell: (i, j),
                    other: None,
                    message: format!("entry ({i},{j}) = {v} outside [{lo}, {hi}]"),
                });
            }
        }
        let cell = |i: usize, j: usize| -> Option<i64> {
            if i == 0 || j == 0 || i + j > self.n {
                None
            } else {
                self.get(i, j).map(i64::from)
            }
        };
        for c in s.iter() {
            for (i, j) in self.cells() {
                let v = cell(i, j).unwrap();
                // (neighbor, allowed slack): v <= w + slack, or v < w for strict.
                let (other, ok, rel) = match c {
                    Color::Green => continue,
                    Color::Orange => {
                        let o = (i + 1, j);
                        match cell(o.0, o.1) {
                            None => continue,
                            Some(w) if x_like => (o, v <= w, "<="),
                            Some(w) => (o, v < w, "<"),
                        }
                    }
                    Color::Red => {
                        if i < 2 {
                            continue;
                        }
                        let o = (i - 1, j + 1);
                        match cell(o.0, o.1) {
                            None => continue,
                            Some(w) if x_like => (o, v <= w, "<="),
                            Some(w) => (o, v <= w + 1, "<= 1 +"),
                        }
                    }
                    Color::Yellow => {
                        let o = (i, j + 1);
                        match cell(o.0, o.1) {
                            None => continue,
                            Some(w) => (o, v <= w, "<="),
                        }
                    }
                    Color::Blue => {
                        let o = (i + 1, j - 1);
                        match cell(o.0, o.1) {
                            None => continue,
                            Some(w) if x_like => (o, v <= w + 1, "<= 1 +"),
                            Some(w) => (o, v <= w, "<="),
                        }
                    }
                    Color::Silver => {
                        let o = (i, j - 1);
                        match cell(o.0, o.1) {
                            None => continue,
                            Some(w) => (o, v <= w + 1, "<= 1 +"),
                        }
                    }
                };
                if !ok {
                    return Err(Violation {
                        color: Some(c),
                        cell: (i, j),
                        other: Some(other),
                        message: format!(
                            "{c} inequality: entry ({i},{j}) {rel} entry ({},{})",
                            other.0, other.1
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self, s: ColorSet) -> bool {
        self.check(s).is_ok()
    }

    fn convert(&self, from: Variant, to: Variant, f: impl Fn(usize, u32) -> u32) -> Self {
        assert_eq!(self.variant, from, "expected a {} array", from.name());
        let mut out = StaircaseArray::from_fn(self.n, to, |i, j| f(i, self.get(i, j).unwrap()));
        out.colors = self.colors;
        out
    }

    /// `y = x + i`.
    pub fn x_to_y(&self) -> Self {
        self.convert(Variant::X, Variant::Y, |i, v| v + i as u32)
    }

    /// `x = y − i`; entries below `i` are clamped to 0 only if invalid input
    /// slipped through, so validate first.
    pub fn y_to_x(&self) -> Self {
        self.convert(Variant::Y, Variant::X, |i, v| v.saturating_sub(i as u32))
    }

    /// Prepend column 0 with entries `1..=n`.
    pub fn y_to_yplus(&self) -> Self {
        self.convert(Variant::Y, Variant::Yplus, |_, v| v)
    }

    /// Drop column 0, which must read `1..=n`.
    pub fn yplus_to_y(&self) -> Result<Self, Error> {
        if self.variant != Variant::Yplus {
            return Err(Error::invalid("staircase array", "expected a Yplus array"));
        }
        for i in 1..=self.n {
            if self.get(i, 0) != Some(i as u32) {
                return Err(Error::invalid(
                    "staircase array",
                    format!("column 0 entry at row {i} must equal {i}"),
                ));
            }
        }
        Ok(self.convert(Variant::Yplus, Variant::Y, |_, v| v))
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "n": self.n,
            "variant": self.variant.name(),
            "rows": self.rows,
        });
        if let Some(s) = self.colors {
            v["colors"] = json!(s.letters());
        }
        v
    }

    /// Accepts `{n, variant, rows, colors?}`, or a bare list of rows with
    /// `variant` given by the caller.
    pub fn from_json(v: &Value, default_variant: Variant) -> Result<Self, Error> {
        let bad = |why: &str| Error::invalid("staircase array", why.to_string());
        let (rows_v, variant, n_given, colors) = match v {
            Value::Array(_) => (v, default_variant, None, None),
            Value::Object(o) => {
                let variant = match o.get("variant") {
                    Some(Value::String(s)) => {
                        Variant::from_name(s).ok_or_else(|| bad("unknown variant"))?
                    }
                    None => default_variant,
                    _ => return Err(bad("variant must be a string")),
                };
                let n = o
                    .get("n")
                    .map(|n| n.as_u64().ok_or_else(|| bad("n must be a number")));
                let colors = match o.get("colors") {
                    Some(Value::String(s)) => Some(s.parse::<ColorSet>()?),
                    _ => None,
                };
                let rows = o.get("rows").ok_or_else(|| bad("missing rows"))?;
                (rows, variant, n.transpose()?, colors)
            }
            _ => return Err(bad("expected an object or a list of rows")),
        };
        let rows: Vec<Vec<u32>> =
            serde_json::from_value(rows_v.clone()).map_err(|e| bad(&format!("rows: {e}")))?;
        let n = match (n_given, variant) {
            (Some(n), _) => n as usize,
            (None, Variant::Yplus) => rows.len(),
            (None, _) => rows.len() + 1,
        };
        let mut a = StaircaseArray::new(n, variant, rows)?;
        a.colors = colors;
        Ok(a)
    }
}

impl fmt::Display for StaircaseArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "({})", rows.join(" / "))
    }
}

/// Chain cell `(i, j)` and position `c2` of an element of `T_n`.
pub fn chain_position(n: usize, c: Coord) -> (usize, usize, usize) {
    let i = c.c1 as usize + 1;
    let j = n - i - c.c3 as usize;
    (i, j, c.c2 as usize)
}

fn require_tetra(p: &ColoredPoset) -> Result<(), Error> {
    if p.kind() != PosetKind::Tetra || p.is_dual() {
        return Err(Error::InvalidArgument(
            "staircase arrays encode ideals of the tetrahedral poset".into(),
        ));
    }
    Ok(())
}

fn check_in_restriction(ideal: &OrderIdeal, p: &ColoredPoset, s: ColorSet) -> Result<(), Error> {
    if ideal.universe() != p.len() {
        return Err(Error::InvalidArgument(
            "ideal does not match the poset".into(),
        ));
    }
    for c in s.iter() {
        for &(t, h) in p.edges(c) {
            if ideal.contains(h) && !ideal.contains(t) {
                return Err(Error::NotAnIdeal { tail: t, head: h });
            }
        }
    }
    Ok(())
}

/// X array of an ideal of `T_n(S)`; `S` must contain green.
pub fn ideal_to_x(
    ideal: &OrderIdeal,
    p: &ColoredPoset,
    s: ColorSet,
) -> Result<StaircaseArray, Error> {
    if !s.contains(Color::Green) {
        return Err(Error::InvalidArgument(
            "staircase arrays need green in the color set".into(),
        ));
    }
    require_tetra(p)?;
    check_in_restriction(ideal, p, s)?;
    let n = p.n();
    let mut a = StaircaseArray::minimal(n, Variant::X);
    for k in ideal.indices() {
        let (i, j, _) = chain_position(n, p.elements()[k]);
        let v = a.get(i, j).unwrap();
        a.set(i, j, v + 1);
    }
    Ok(a.with_colors(s))
}

/// Inverse of [`ideal_to_x`]; rejects arrays that violate `S`.
pub fn x_to_ideal(a: &StaircaseArray, p: &ColoredPoset, s: ColorSet) -> Result<OrderIdeal, Error> {
    if a.variant() != Variant::X {
        return Err(Error::invalid("staircase array", "expected an X array"));
    }
    require_tetra(p)?;
    if a.n() != p.n() {
        return Err(Error::InvalidArgument(
            "array and poset sizes differ".into(),
        ));
    }
    a.check(s)?;
    let n = p.n();
    let members = p.elements().iter().enumerate().filter_map(|(k, &c)| {
        let (i, j, pos) = chain_position(n, c);
        ((pos as u32) < a.get(i, j).unwrap()).then_some(k)
    });
    let ideal = OrderIdeal::from_indices(p.len(), members);
    check_in_restriction(&ideal, p, s)?;
    Ok(ideal)
}

/// Every array of the given variant for `T_n(S)`, in the order of
/// [`enumerate_ideals`](crate::ideal::enumerate_ideals). Green is added to
/// `S` when absent.
pub fn all_arrays(n: usize, s: ColorSet, variant: Variant) -> Vec<StaircaseArray> {
    let s = s.with(Color::Green);
    let p = ColoredPoset::tetra(n, s);
    crate::ideal::enumerate_ideals(&p)
        .iter()
        .map(|ideal| {
            let x = ideal_to_x(ideal, &p, s).expect("enumerated ideals are ideals");
            match variant {
                Variant::X => x,
                Variant::Y => x.x_to_y(),
                Variant::Yplus => x.x_to_y().y_to_yplus(),
            }
        })
        .collect()
}
