//! The unit every score in the engine is expressed in.
//!
//! [`Bits`] is a non-negative amount of information, possibly `+∞`
//! ("no known way to generate this"). Signed quantities such as
//! unexpectedness or mutability are plain `f64`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A non-negative complexity in bits. Never NaN; may be `+∞`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bits(f64);

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
#[error("invalid complexity {0}: bits must be a non-negative number")]
pub struct InvalidBits(pub f64);

impl Bits {
    pub const ZERO: Bits = Bits(0.0);
    pub const INFINITY: Bits = Bits(f64::INFINITY);

    pub fn new(value: f64) -> Result<Self, InvalidBits> {
        if value.is_nan() || value < 0.0 {
            return Err(InvalidBits(value));
        }
        // -0.0 would print as "-0"
        Ok(Bits(value + 0.0))
    }

    /// `log2(x)` for `x >= 1`.
    pub fn log2(x: f64) -> Result<Self, InvalidBits> {
        if !(x >= 1.0) {
            return Err(InvalidBits(x));
        }
        Bits::new(x.log2())
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn min(self, other: Bits) -> Bits {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Bits) -> Bits {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl Eq for Bits {}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bits {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl Add for Bits {
    type Output = Bits;

    fn add(self, rhs: Bits) -> Bits {
        Bits(self.0 + rhs.0)
    }
}

impl Sum for Bits {
    fn sum<I: Iterator<Item = Bits>>(iter: I) -> Bits {
        iter.fold(Bits::ZERO, Add::add)
    }
}

impl TryFrom<f64> for Bits {
    type Error = InvalidBits;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        Bits::new(value)
    }
}

impl From<u32> for Bits {
    fn from(value: u32) -> Self {
        Bits(f64::from(value))
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_real(self.0, f)
    }
}

/// Formats a real number of bits, honouring `{:.N}` precision and
/// printing infinities as `inf` / `-inf`.
pub(crate) fn fmt_real(value: f64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if value.is_infinite() {
        return f.write_str(if value > 0.0 { "inf" } else { "-inf" });
    }
    match f.precision() {
        Some(p) => write!(f, "{:.*}", p, value),
        None => write!(f, "{}", value),
    }
}

/// Display adaptor for signed real bits (unexpectedness, mutability).
pub struct Real(pub f64);

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_real(self.0, f)
    }
}

// JSON has no infinity, so infinite values travel as the strings "inf" / "-inf".

impl Serialize for Bits {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        real::serialize(&self.0, serializer)
    }
}

impl<'de> Deserialize<'de> for Bits {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = real::deserialize(deserializer)?;
        Bits::new(value).map_err(de::Error::custom)
    }
}

/// Serde helpers for signed reals that may be infinite.
pub mod real {
    use super::*;

    pub fn serialize<S: Serializer>(value: &f64, serializer: S) -> Result<S::Ok, S::Error> {
        if value.is_infinite() {
            serializer.serialize_str(if *value > 0.0 { "inf" } else { "-inf" })
        } else {
            serializer.serialize_f64(*value)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<f64, D::Error> {
        struct RealVisitor;

        impl Visitor<'_> for RealVisitor {
            type Value = f64;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a number, \"inf\" or \"-inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
                Ok(v)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
                Ok(v as f64)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
                Ok(v as f64)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
                match v {
                    "inf" | "+inf" => Ok(f64::INFINITY),
                    "-inf" => Ok(f64::NEG_INFINITY),
                    other => Err(E::invalid_value(de::Unexpected::Str(other), &self)),
                }
            }
        }

        deserializer.deserialize_any(RealVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_negative_and_nan() {
        assert!(Bits::new(-0.5).is_err());
        assert!(Bits::new(f64::NAN).is_err());
        assert!(Bits::new(f64::INFINITY).is_ok());
        assert_eq!(Bits::new(-0.0).unwrap().to_string(), "0");
    }

    #[test]
    fn infinity_round_trips_through_json() {
        let json = serde_json::to_string(&Bits::INFINITY).unwrap();
        assert_eq!(json, "\"inf\"");
        let back: Bits = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Bits::INFINITY);
        let five: Bits = serde_json::from_str("5").unwrap();
        assert_eq!(five.value(), 5.0);
        assert!(serde_json::from_str::<Bits>("-1").is_err());
    }

    #[test]
    fn ordering_and_arithmetic() {
        let a = Bits::new(3.0).unwrap();
        let b = Bits::new(4.5).unwrap();
        assert_eq!(a.min(b), a);
        assert_eq!(a.max(Bits::INFINITY), Bits::INFINITY);
        assert_eq!((a + b).value(), 7.5);
        assert_eq!([a, b, a].into_iter().sum::<Bits>().value(), 10.5);
        assert_eq!(format!("{:.2}", Bits::log2(52.0).unwrap()), "5.70");
        assert_eq!(format!("{:.2}", Real(f64::NEG_INFINITY)), "-inf");
    }
}
