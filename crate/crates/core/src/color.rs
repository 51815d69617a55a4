//! Edge colors of the tetrahedral poset and subsets of them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// One of the six edge colors. The derived ordering is the canonical
/// serialization order `r < b < g < o < y < s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
    Green,
    Orange,
    Yellow,
    Silver,
}

impl Color {
    pub const ALL: [Color; 6] = [
        Color::Red,
        Color::Blue,
        Color::Green,
        Color::Orange,
        Color::Yellow,
        Color::Silver,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Blue => 'b',
            Color::Green => 'g',
            Color::Orange => 'o',
            Color::Yellow => 'y',
            Color::Silver => 's',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
            Color::Green => "green",
            Color::Orange => "orange",
            Color::Yellow => "yellow",
            Color::Silver => "silver",
        }
    }

    pub fn from_letter(c: char) -> Option<Color> {
        Color::ALL
            .into_iter()
            .find(|col| col.letter() == c.to_ascii_lowercase())
    }

    pub fn from_name(s: &str) -> Option<Color> {
        Color::ALL.into_iter().find(|col| col.name() == s)
    }

    /// Coordinate move `(dc1, dc2, dc3)` of an edge of this color. The three
    /// generators r, g, y are unit moves; b = g - r, o = y - r, s = g - y.
    pub fn step(self) -> [i32; 3] {
        match self {
            Color::Red => [1, 0, 0],
            Color::Green => [0, 1, 0],
            Color::Yellow => [0, 0, 1],
            Color::Blue => [-1, 1, 0],
            Color::Orange => [-1, 0, 1],
            Color::Silver => [0, 1, -1],
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A subset of the six colors, stored as a bitmask indexed by [`Color::index`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u8);

/// Each rule `(a, b, c)`: if both `a` and `b` are present then `c` is induced.
const INDUCTION_RULES: [(Color, Color, Color); 4] = [
    (Color::Red, Color::Blue, Color::Green),
    (Color::Orange, Color::Silver, Color::Blue),
    (Color::Silver, Color::Yellow, Color::Green),
    (Color::Red, Color::Orange, Color::Yellow),
];

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const ALL: ColorSet = ColorSet(0b11_1111);

    pub fn from_bits(bits: u8) -> ColorSet {
        ColorSet(bits & 0b11_1111)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn of(colors: &[Color]) -> ColorSet {
        colors.iter().fold(ColorSet::EMPTY, |s, &c| s.with(c))
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & (1 << c.index()) != 0
    }

    pub fn with(self, c: Color) -> ColorSet {
        ColorSet(self.0 | (1 << c.index()))
    }

    pub fn without(self, c: Color) -> ColorSet {
        ColorSet(self.0 & !(1 << c.index()))
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |&c| self.contains(c))
    }

    /// All 64 subsets in increasing bitmask order.
    pub fn all_subsets() -> impl Iterator<Item = ColorSet> {
        (0u8..64).map(ColorSet)
    }

    /// The 40 admissible subsets in increasing bitmask order.
    pub fn admissible_sets() -> Vec<ColorSet> {
        ColorSet::all_subsets()
            .filter(|s| s.is_admissible())
            .collect()
    }

    pub fn is_admissible(self) -> bool {
        INDUCTION_RULES
            .iter()
            .all(|&(a, b, c)| !(self.contains(a) && self.contains(b)) || self.contains(c))
    }

    /// Smallest admissible superset.
    pub fn admissible_closure(self) -> ColorSet {
        let mut s = self;
        loop {
            let next = INDUCTION_RULES.iter().fold(s, |acc, &(a, b, c)| {
                if acc.contains(a) && acc.contains(b) {
                    acc.with(c)
                } else {
                    acc
                }
            });
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Canonical letter string, e.g. `"bgoy"`.
    pub fn letters(self) -> String {
        self.iter().map(Color::letter).collect()
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c.letter())?;
        }
        write!(f, "}}")
    }
}

impl FromStr for ColorSet {
    type Err = Error;

    /// Parses an order-insensitive letter string over `rbgoys`. Braces,
    /// commas, parentheses and whitespace are ignored, so `"{r,b,(g),y}"`
    /// and `"rbgy"` are the same set.
    fn from_str(s: &str) -> Result<ColorSet, Error> {
        let mut set = ColorSet::EMPTY;
        for ch in s.chars() {
            if matches!(ch, '{' | '}' | ',' | '(' | ')') || ch.is_whitespace() {
                continue;
            }
            let c = Color::from_letter(ch).ok_or_else(|| Error::ColorParse(s.to_string()))?;
            set = set.with(c);
        }
        Ok(set)
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.letters())
    }
}

impl<'de> Deserialize<'de> for ColorSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Enumeration-formula class of an admissible color set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremClass {
    Empty,
    Single,
    TwoOpposite,
    TwoAdjacent,
    ThreeNice,
    ThreeExceptional,
    Four,
    FiveA,
    FiveB,
    Six,
}

impl TheoremClass {
    pub fn name(self) -> &'static str {
        match self {
            TheoremClass::Empty => "empty",
            TheoremClass::Single => "single",
            TheoremClass::TwoOpposite => "two-opposite",
            TheoremClass::TwoAdjacent => "two-adjacent",
            TheoremClass::ThreeNice => "three-nice",
            TheoremClass::ThreeExceptional => "three-exceptional",
            TheoremClass::Four => "four",
            TheoremClass::FiveA => "five-a",
            TheoremClass::FiveB => "five-b",
            TheoremClass::Six => "six",
        }
    }
}

impl fmt::Display for TheoremClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn set(letters: &str) -> ColorSet {
    letters.parse().expect("static color letters")
}

/// Two-color sets whose rank generating function is the product of
/// Carlitz-Riordan q-Catalan numbers directly.
pub fn catalan_direct_sets() -> [ColorSet; 4] {
    [set("bg"), set("bs"), set("yo"), set("gs")]
}

/// Two-color sets whose *dual* poset carries the q-Catalan product.
pub fn catalan_dual_sets() -> [ColorSet; 4] {
    [set("ry"), set("rg"), set("yg"), set("bo")]
}

/// The six four-color sets whose ideals are counted by TSSCPPs; the
/// remaining admissible four-color set `{b,g,o,y}` is the ASM poset.
pub fn tsscpp_sets() -> [ColorSet; 6] {
    [
        set("rgoy"),
        set("rbgy"),
        set("rgys"),
        set("bgys"),
        set("bgos"),
        set("rbgs"),
    ]
}

/// The two three-color sets whose ideal counts have no product formula.
/// They are dual to each other.
pub fn exceptional_sets() -> [ColorSet; 2] {
    [set("rgy"), set("bgs")]
}

pub fn asm_set() -> ColorSet {
    set("bgoy")
}

/// Classify an admissible color set by its enumeration formula.
pub fn classify(s: ColorSet) -> Result<TheoremClass, Error> {
    if !s.is_admissible() {
        return Err(Error::NotAdmissible(s));
    }
    let class = match s.len() {
        0 => TheoremClass::Empty,
        1 => TheoremClass::Single,
        2 => {
            if [set("go"), set("rs"), set("by")].contains(&s) {
                TheoremClass::TwoOpposite
            } else {
                TheoremClass::TwoAdjacent
            }
        }
        3 => {
            if exceptional_sets().contains(&s) {
                TheoremClass::ThreeExceptional
            } else {
                TheoremClass::ThreeNice
            }
        }
        4 => TheoremClass::Four,
        5 => {
            if s == set("rbgys") {
                TheoremClass::FiveB
            } else {
                TheoremClass::FiveA
            }
        }
        _ => TheoremClass::Six,
    };
    Ok(class)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forty_admissible() {
        assert_eq!(ColorSet::admissible_sets().len(), 40);
    }

    #[test]
    fn closure_examples() {
        assert_eq!(set("rb").admissible_closure(), set("rbg"));
        assert_eq!(set("ro").admissible_closure(), set("roy"));
        assert_eq!(set("ros").admissible_closure(), set("rosybg"));
    }

    #[test]
    fn closure_operator_laws() {
        for s in ColorSet::all_subsets() {
            let c = s.admissible_closure();
            assert!(s.is_subset(c), "inflationary at {s}");
            assert_eq!(c.admissible_closure(), c, "idempotent at {s}");
            assert!(c.is_admissible());
            if s.is_admissible() {
                assert_eq!(c, s);
            }
            for t in ColorSet::all_subsets() {
                if s.is_subset(t) {
                    assert!(c.is_subset(t.admissible_closure()), "monotone {s} {t}");
                }
            }
        }
    }

    #[test]
    fn steps_are_vector_differences() {
        let sub = |a: [i32; 3], b: [i32; 3]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
        assert_eq!(
            Color::Blue.step(),
            sub(Color::Green.step(), Color::Red.step())
        );
        assert_eq!(
            Color::Orange.step(),
            sub(Color::Yellow.step(), Color::Red.step())
        );
        assert_eq!(
            Color::Silver.step(),
            sub(Color::Green.step(), Color::Yellow.step())
        );
    }

    #[test]
    fn parse_and_display() {
        let s: ColorSet = "{r,b,(g),y}".parse().unwrap();
        assert_eq!(s.letters(), "rbgy");
        assert_eq!("yobg".parse::<ColorSet>().unwrap().letters(), "bgoy");
        assert_eq!("".parse::<ColorSet>().unwrap(), ColorSet::EMPTY);
        assert!("rx".parse::<ColorSet>().is_err());
        assert_eq!(set("bgoy").to_string(), "{b,g,o,y}");
    }

    #[test]
    fn classification() {
        assert_eq!(classify(set("go")).unwrap(), TheoremClass::TwoOpposite);
        assert_eq!(
            classify(set("rgy")).unwrap(),
            TheoremClass::ThreeExceptional
        );
        assert_eq!(classify(set("byog")).unwrap(), TheoremClass::Four);
        assert!(classify(set("rb")).is_err());

        let mut counts = std::collections::BTreeMap::new();
        for s in ColorSet::admissible_sets() {
            *counts.entry(classify(s).unwrap()).or_insert(0) += 1;
        }
        use TheoremClass::*;
        let expect = [
            (Empty, 1),
            (Single, 6),
            (TwoOpposite, 3),
            (TwoAdjacent, 8),
            (ThreeNice, 9),
            (ThreeExceptional, 2),
            (Four, 7),
            (FiveA, 2),
            (FiveB, 1),
            (Six, 1),
        ];
        for (class, n) in expect {
            assert_eq!(counts[&class], n, "{class}");
        }
        for s in catalan_direct_sets()
            .iter()
            .chain(catalan_dual_sets().iter())
        {
            assert_eq!(classify(*s).unwrap(), TwoAdjacent);
        }
        for s in tsscpp_sets() {
            assert_eq!(classify(s).unwrap(), Four);
        }
    }
}
