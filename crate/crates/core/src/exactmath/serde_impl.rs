//! Wire format: a rational is the string `"p/q"` in lowest terms (integers
//! drop the `/1`), a polynomial is a JSON array of such strings indexed by
//! power.

use std::fmt::Display;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use super::scalar::Coefficient;

impl<T: Coefficient + Display> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs().iter().map(|c| c.to_string()))
    }
}

impl<'de, T> Deserialize<'de> for Poly<T>
where
    T: Coefficient + FromStr,
    T::Err: Display,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<T>().map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

/// `#[serde(with = "rational")]` for a single exact scalar.
pub mod rational {
    use super::*;

    pub fn serialize<T: Display, S: Serializer>(value: &T, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, T, D>(deserializer: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("bad rational {s:?}: {e}")))
    }
}

/// `#[serde(with = "rational_opt")]` for an optional exact scalar (`null` when absent).
pub mod rational_opt {
    use super::*;

    pub fn serialize<T: Display, S: Serializer>(value: &Option<T>, serializer: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => serializer.collect_str(v),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, T, D>(deserializer: D) -> Result<Option<T>, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        Option::<String>::deserialize(deserializer)?
            .map(|s| s.parse().map_err(|e| D::Error::custom(format!("bad rational {s:?}: {e}"))))
            .transpose()
    }
}
