//! Combinatorial objects and the bijections between them and the order
//! ideals or staircase arrays of the colored posets.

pub mod asm;
pub mod dyck;
pub mod plane_partition;
pub mod shuffle;
pub mod stats;
pub mod sundquist;
pub mod tournament;
pub mod tspp;
pub mod tsscpp;
