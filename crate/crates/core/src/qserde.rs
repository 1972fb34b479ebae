//! Serde adapters that write rationals as exact `p/q` strings.
//!
//! Exact rationals routinely exceed the numeric range of common
//! interchange formats, so every rational in a document is a string
//! that re-parses to the identical value.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

use crate::linalg::{format_rational, parse_rational, Rational};

pub mod rat_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect()
    }
}
