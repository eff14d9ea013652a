//! Serde helpers that write big integers as JSON numbers (not strings),
//! at any magnitude. Requires serde_json's arbitrary-precision numbers.

use num_bigint::BigInt;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;
use std::str::FromStr;

fn to_number<E: serde::ser::Error>(x: &BigInt) -> Result<Number, E> {
    Number::from_str(&x.to_string()).map_err(serde::ser::Error::custom)
}

fn from_number<E: de::Error>(n: &Number) -> Result<BigInt, E> {
    BigInt::from_str(&n.to_string())
        .map_err(|_| de::Error::custom(format!("expected an integer, got {n}")))
}

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_number::<S::Error>(x)?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_number(&Number::deserialize(d)?)
    }
}

pub mod bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let nums: Result<Vec<Number>, S::Error> = xs.iter().map(to_number).collect();
        nums?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Number>::deserialize(d)?
            .iter()
            .map(from_number)
            .collect()
    }
}
