//! The tetrahedral poset `T_n`, its color-restricted subposets, their order
//! ideals and rank generating functions, and the bijections relating them to
//! alternating sign matrices, plane partitions, Dyck paths and tournaments.

pub mod bijections;
pub mod color;
pub mod error;
pub mod ideal;
pub mod identities;
pub mod poly;
pub mod poset;
pub mod staircase;
pub mod suite;

pub use color::{classify, Color, ColorSet, TheoremClass};
pub use error::Error;
pub use ideal::OrderIdeal;
pub use poly::multi::MultiPolynomial;
pub use poly::q::QPolynomial;
pub use poset::{ColoredPoset, Coord, PosetKind};
pub use staircase::{StaircaseArray, Variant};

pub type Result<T> = std::result::Result<T, Error>;
