//! JSON encoding for exact integers: a JSON number when it fits in `i64`,
//! otherwise a decimal string. Decoding accepts either form.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

fn parse_decimal<E: de::Error>(s: &str) -> Result<u128, E> {
    s.parse::<u128>().map_err(|_| E::custom(format!("not a non-negative integer: {s:?}")))
}

struct U128Visitor;

impl<'de> Visitor<'de> for U128Visitor {
    type Value = u128;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a non-negative integer or decimal string")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<u128, E> {
        Ok(v.into())
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<u128, E> {
        u128::try_from(v).map_err(|_| E::custom("negative integer"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<u128, E> {
        parse_decimal(v)
    }
}

pub mod u128_int {
    use super::*;

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        if *v <= i64::MAX as u128 {
            s.serialize_u64(*v as u64)
        } else {
            s.serialize_str(&v.to_string())
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        d.deserialize_any(U128Visitor)
    }
}

pub mod biguint_int {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;

    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match v.to_u64() {
            Some(x) if x <= i64::MAX as u64 => s.serialize_u64(x),
            _ => s.serialize_str(&v.to_str_radix(10)),
        }
    }

    struct BigVisitor;

    impl<'de> Visitor<'de> for BigVisitor {
        type Value = BigUint;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a non-negative integer or decimal string")
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigUint, E> {
            Ok(v.into())
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigUint, E> {
            u64::try_from(v).map(BigUint::from).map_err(|_| E::custom("negative integer"))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigUint, E> {
            BigUint::parse_bytes(v.as_bytes(), 10)
                .ok_or_else(|| E::custom(format!("not a non-negative integer: {v:?}")))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        d.deserialize_any(BigVisitor)
    }
}
