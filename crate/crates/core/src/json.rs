//! Serialization helpers shared by the JSON formats.
//!
//! Integers travel as plain JSON numbers (range of `i128`); exact rationals
//! travel as strings of the form `"p/q"` with `q > 0` and the fraction reduced.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{self, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub(crate) fn int_to_i128<E: ser::Error>(v: &BigInt) -> Result<i128, E> {
    v.to_i128()
        .ok_or_else(|| E::custom(format!("integer {v} exceeds the JSON integer range")))
}

/// Canonical `"p/q"` text for a rational; the denominator is always written.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| invalid(format!("bad rational {text:?}")))?;
    let den = BigInt::from_str(den).map_err(|_| invalid(format!("bad rational {text:?}")))?;
    if den.is_zero() {
        return Err(invalid(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// An integer read from any JSON number without a fractional part.
///
/// Goes through `deserialize_any` so it also works inside buffered
/// (untagged) deserialization, which has no `i128` path.
pub(crate) struct JsonInt(pub BigInt);

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = JsonInt;

            fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("an integer")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_i128<E: de::Error>(self, v: i128) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_u128<E: de::Error>(self, v: u128) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
        }
        d.deserialize_any(V)
    }
}

/// A rational read from JSON: either a `"p/q"` string or a JSON integer.
#[derive(Deserialize)]
#[serde(untagged)]
enum RationalRepr {
    Text(String),
    Int(JsonInt),
}

pub(crate) mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        format_rational(q).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        match RationalRepr::deserialize(d)? {
            RationalRepr::Text(t) => parse_rational(&t).map_err(de::Error::custom),
            RationalRepr::Int(i) => Ok(BigRational::new(i.0, BigInt::one())),
        }
    }
}

/// Serde adapter for a sequence of rationals.
pub mod rational_vec {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Wrapped(#[serde(with = "rational")] BigRational);

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<Wrapped> = v.iter().cloned().map(Wrapped).collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let wrapped = Vec::<Wrapped>::deserialize(d)?;
        Ok(wrapped.into_iter().map(|w| w.0).collect())
    }
}
