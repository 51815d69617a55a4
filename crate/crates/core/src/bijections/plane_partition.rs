//! Plane partitions as height matrices, with symmetry predicates evaluated
//! on the cube-set view.

use std::collections::HashSet;

use serde_json::{json, Value};

use crate::error::Error;

/// Heights `h[x][y]` in `0..=c` over an `a × b` base, weakly decreasing
/// along rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanePartition {
    bounds: [usize; 3],
    heights: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn new(bounds: [usize; 3], heights: Vec<Vec<u32>>) -> Result<Self, Error> {
        let [a, b, c] = bounds;
        let bad = |why: String| Err(Error::invalid("plane partition", why));
        if heights.len() != a || heights.iter().any(|r| r.len() != b) {
            return bad(format!("height matrix must be {a} × {b}"));
        }
        for x in 0..a {
            for y in 0..b {
                let h = heights[x][y];
                if h as usize > c {
                    return bad(format!("height {h} at ({},{}) exceeds {c}", x + 1, y + 1));
                }
                if (x > 0 && heights[x - 1][y] < h) || (y > 0 && heights[x][y - 1] < h) {
                    return bad(format!("heights increase at ({},{})", x + 1, y + 1));
                }
            }
        }
        Ok(PlanePartition { bounds, heights })
    }

    pub fn empty(bounds: [usize; 3]) -> Self {
        PlanePartition {
            bounds,
            heights: vec![vec![0; bounds[1]]; bounds[0]],
        }
    }

    /// Builds from a set of unit cubes `(x, y, z)`, 0-based; the set must be
    /// a plane partition.
    pub fn from_cubes(bounds: [usize; 3], cubes: &HashSet<[usize; 3]>) -> Result<Self, Error> {
        let mut heights = vec![vec![0u32; bounds[1]]; bounds[0]];
        for &[x, y, z] in cubes {
            if x >= bounds[0] || y >= bounds[1] || z >= bounds[2] {
                return Err(Error::invalid("plane partition", "cube outside the box"));
            }
            heights[x][y] += 1;
        }
        let pp = PlanePartition::new(bounds, heights)?;
        if pp.cubes() != *cubes {
            return Err(Error::invalid("plane partition", "cube set is not a stack"));
        }
        Ok(pp)
    }

    pub fn bounds(&self) -> [usize; 3] {
        self.bounds
    }

    pub fn heights(&self) -> &[Vec<u32>] {
        &self.heights
    }

    /// Height at 1-based `(x, y)`.
    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.heights[x - 1][y - 1]
    }

    pub fn volume(&self) -> u64 {
        self.heights.iter().flatten().map(|&h| h as u64).sum()
    }

    /// Unit cubes `(x, y, z)`, 0-based, with `z < h[x][y]`.
    pub fn cubes(&self) -> HashSet<[usize; 3]> {
        let mut out = HashSet::new();
        for (x, row) in self.heights.iter().enumerate() {
            for (y, &h) in row.iter().enumerate() {
                for z in 0..h as usize {
                    out.insert([x, y, z]);
                }
            }
        }
        out
    }

    /// Invariant under every permutation of the three axes.
    pub fn is_totally_symmetric(&self) -> bool {
        let [a, b, c] = self.bounds;
        if a != b || b != c {
            return false;
        }
        let cubes = self.cubes();
        cubes.iter().all(|&[x, y, z]| {
            [[y, x, z], [x, z, y], [z, y, x], [y, z, x], [z, x, y]]
                .iter()
                .all(|p| cubes.contains(p))
        })
    }

    /// The complement of the stack inside the box, rotated by a half turn,
    /// equals the stack itself.
    pub fn is_self_complementary(&self) -> bool {
        let [a, b, c] = self.bounds;
        (0..a).all(|x| {
            (0..b).all(|y| {
                self.heights[x][y] as usize + self.heights[a - 1 - x][b - 1 - y] as usize == c
            })
        })
    }

    pub fn is_tsscpp(&self) -> bool {
        self.bounds[0].is_multiple_of(2)
            && self.is_totally_symmetric()
            && self.is_self_complementary()
    }

    pub fn to_json(&self) -> Value {
        json!({ "box": self.bounds, "heights": self.heights })
    }

    /// Accepts `{box, heights}` or a bare `k × k` height matrix, whose box
    /// is taken as `k × k × k`.
    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let bad = |why: String| Error::invalid("plane partition", why);
        let (bounds, heights_v) = match v {
            Value::Object(o) => {
                let heights = o
                    .get("heights")
                    .ok_or_else(|| bad("missing heights".into()))?;
                let bounds: Option<[usize; 3]> = match o.get("box") {
                    Some(b) => Some(
                        serde_json::from_value(b.clone()).map_err(|e| bad(format!("box: {e}")))?,
                    ),
                    None => None,
                };
                (bounds, heights)
            }
            _ => (None, v),
        };
        let heights: Vec<Vec<u32>> =
            serde_json::from_value(heights_v.clone()).map_err(|e| bad(format!("heights: {e}")))?;
        let bounds = bounds.unwrap_or_else(|| {
            let k = heights.len();
            [k, k, k]
        });
        PlanePartition::new(bounds, heights)
    }
}
