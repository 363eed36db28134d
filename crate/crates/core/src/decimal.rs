//! Serde helpers writing exact numbers as decimal strings.
//!
//! Every integer in the JSON formats is a string (`"-12"`) and every
//! rational is `"p/q"`, so values round-trip regardless of how the consumer
//! treats JSON numbers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serializer};

use crate::linalg::Scalar;

pub fn int<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn int_vec<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(ToString::to_string))
}

pub fn rat_vec<S: Serializer>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(ToString::to_string))
}

/// Integer-keyed map in ascending key order.
pub fn int_map<S: Serializer>(map: &BTreeMap<BigInt, BigInt>, s: S) -> Result<S::Ok, S::Error> {
    let mut out = s.serialize_map(Some(map.len()))?;
    for (k, v) in map {
        out.serialize_entry(&k.to_string(), &v.to_string())?;
    }
    out.end()
}

pub(crate) fn parse<T: Scalar, E: serde::de::Error>(text: &str) -> Result<T, E> {
    T::parse_exact(text).ok_or_else(|| E::custom(format!("invalid exact number {text:?}")))
}

pub fn de_int<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    parse(&String::deserialize(d)?)
}

pub fn de_int_vec<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
    Vec::<String>::deserialize(d)?
        .iter()
        .map(|t| parse(t))
        .collect()
}

pub fn de_rat_vec<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
    Vec::<String>::deserialize(d)?
        .iter()
        .map(|t| parse(t))
        .collect()
}

pub fn de_int_map<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<BigInt, BigInt>, D::Error> {
    let raw = BTreeMap::<String, String>::deserialize(d)?;
    let mut map = BTreeMap::new();
    for (k, v) in raw {
        if map.insert(parse(&k)?, parse(&v)?).is_some() {
            return Err(D::Error::custom(format!("duplicate position {k:?}")));
        }
    }
    Ok(map)
}
