//! JSON helpers shared by the serializable payloads.
//!
//! Big integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; both forms are accepted when reading.

pub mod bigint {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match x.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&x.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        UInt(u64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(BigInt::from(v)),
            Repr::UInt(v) => Ok(BigInt::from(v)),
            Repr::Str(s) => BigInt::from_str(&s).map_err(de::Error::custom),
        }
    }
}

/// A [`num_bigint::BigInt`] newtype with the number-or-string JSON form, for
/// use inside collections.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct JsonInt(#[serde(with = "bigint")] pub num_bigint::BigInt);
