//! Totally symmetric plane partitions in an `(n−1)`-cube and the order
//! ideals of the full tetrahedral poset `T_n`.
//!
//! The wedge `x ≥ y ≥ z` of the cube is a fundamental domain; the element
//! `(c1, c2, c3)` sits at the wedge point `(c1+c2+c3, c2+c3, c2)` (0-based).

use std::collections::HashSet;

use crate::error::Error;
use crate::ideal::OrderIdeal;
use crate::poset::{ColoredPoset, Coord, PosetKind};

use super::plane_partition::PlanePartition;

fn require_full_tetra(p: &ColoredPoset) -> Result<(), Error> {
    if p.kind() != PosetKind::Tetra || p.is_dual() {
        return Err(Error::InvalidArgument(
            "totally symmetric plane partitions encode ideals of T_n".into(),
        ));
    }
    Ok(())
}

fn wedge_point(c: Coord) -> [usize; 3] {
    let (c1, c2, c3) = (c.c1 as usize, c.c2 as usize, c.c3 as usize);
    [c1 + c2 + c3, c2 + c3, c2]
}

/// Every permutation of every wedge point of the ideal, stacked in an
/// `(n−1)`-cube. The ideal must be down-closed in the full poset.
pub fn ideal_to_tspp(ideal: &OrderIdeal, p: &ColoredPoset) -> Result<PlanePartition, Error> {
    require_full_tetra(p)?;
    let full = ColoredPoset::build_tetra(p.n());
    ideal.check(&full)?;
    let k = p.n() - 1;
    let mut cubes = HashSet::new();
    for i in ideal.indices() {
        let [x, y, z] = wedge_point(p.elements()[i]);
        for q in [
            [x, y, z],
            [x, z, y],
            [y, x, z],
            [y, z, x],
            [z, x, y],
            [z, y, x],
        ] {
            cubes.insert(q);
        }
    }
    PlanePartition::from_cubes([k, k, k], &cubes)
}

pub fn tspp_to_ideal(pp: &PlanePartition, p: &ColoredPoset) -> Result<OrderIdeal, Error> {
    require_full_tetra(p)?;
    let k = p.n() - 1;
    if pp.bounds() != [k, k, k] {
        return Err(Error::invalid(
            "TSPP",
            format!("box must be {k} × {k} × {k}"),
        ));
    }
    if !pp.is_totally_symmetric() {
        return Err(Error::invalid("TSPP", "not totally symmetric"));
    }
    let mut members = Vec::new();
    for [x, y, z] in pp.cubes() {
        if x >= y && y >= z {
            let c = Coord::new((x - y) as u32, z as u32, (y - z) as u32);
            members.push(p.index_of(c).expect("wedge point inside T_n"));
        }
    }
    Ok(OrderIdeal::from_indices(p.len(), members))
}
