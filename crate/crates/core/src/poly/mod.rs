//! Exact polynomial arithmetic over arbitrary-precision integers.

pub mod multi;
pub mod q;

use std::fmt::Display;

use serde_json::{Number, Value};

/// An integer as a JSON number literal (never a string), at any size.
pub fn bigint_json(x: &impl Display) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer literal"))
}
