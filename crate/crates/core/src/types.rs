//! Scalar domain types: dimensions, lengths, areas, volumes.
//!
//! All quantities are in hyperbolic units (curvature −1). `Length` doubles
//! as `Width` and `Radius` throughout the crate. A positive-infinite length
//! is representable, but only the operations that document it accept one.

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};

/// Ambient dimension `n` of `H^n`. Supported range is `2..=20`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Dimension(u32);

pub const MIN_DIMENSION: u32 = 2;
pub const MAX_DIMENSION: u32 = 20;

impl Dimension {
    pub fn new(n: u32) -> Result<Self> {
        if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&n) {
            return Err(Error::UnsupportedDimension {
                n,
                why: format!("supported dimensions are {MIN_DIMENSION}..={MAX_DIMENSION}"),
            });
        }
        Ok(Dimension(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = u32::deserialize(d)?;
        Dimension::new(n).map_err(de::Error::custom)
    }
}

/// A nonnegative hyperbolic length. `Length::INFINITY` is the documented
/// +∞ sentinel; constructors for ordinary values reject non-finite input.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Length(f64);

/// Width of a neighborhood (a length).
pub type Width = Length;
/// Radius of a ball or disc (a length).
pub type Radius = Length;

impl Length {
    pub const ZERO: Length = Length(0.0);
    pub const INFINITY: Length = Length(f64::INFINITY);

    /// A finite nonnegative length.
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::Domain(format!(
                "length must be a finite nonnegative real, got {value}"
            )));
        }
        Ok(Length(value))
    }

    /// A finite strictly positive length.
    pub fn positive(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::Domain(format!(
                "length must be a finite positive real, got {value}"
            )));
        }
        Ok(Length(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    /// Internal constructor for values already known to be valid outputs
    /// (nonnegative, possibly +∞ where documented).
    pub(crate) fn from_computed(value: f64) -> Self {
        debug_assert!(value >= 0.0, "computed length went negative: {value}");
        Length(value)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ext_real::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for Length {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = ext_real::deserialize(d)?;
        if v.is_nan() || v < 0.0 {
            return Err(de::Error::custom(format!("invalid length {v}")));
        }
        Ok(Length(v))
    }
}

/// Hypersurface area ((n−1)-volume); strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Area(f64);

impl Area {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::Domain(format!(
                "area must be a finite positive real, got {value}"
            )));
        }
        Ok(Area(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Area {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        Area::new(v)
    }
}

impl From<Area> for f64 {
    fn from(a: Area) -> f64 {
        a.0
    }
}

impl fmt::Display for Area {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A nonnegative n-dimensional hyperbolic volume.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Volume(f64);

impl Volume {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::Domain(format!(
                "volume must be a finite nonnegative real, got {value}"
            )));
        }
        Ok(Volume(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub(crate) fn from_computed(value: f64) -> Self {
        debug_assert!(value >= 0.0, "computed volume went negative: {value}");
        Volume(value)
    }
}

impl TryFrom<f64> for Volume {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        Volume::new(v)
    }
}

impl From<Volume> for f64 {
    fn from(v: Volume) -> f64 {
        v.0
    }
}

impl fmt::Display for Volume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Serde helpers for extended reals: finite values as JSON numbers, the
/// infinities as the strings `"inf"` / `"-inf"` (JSON has no infinities).
pub mod ext_real {
    use super::*;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else if *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }

    struct ExtRealVisitor;

    impl Visitor<'_> for ExtRealVisitor {
        type Value = f64;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a number, \"inf\", or \"-inf\"")
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<f64, E> {
            Ok(v)
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<f64, E> {
            Ok(v as f64)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<f64, E> {
            Ok(v as f64)
        }

        fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<f64, E> {
            match v {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                other => Err(E::custom(format!("expected \"inf\" or \"-inf\", got {other:?}"))),
            }
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
        d.deserialize_any(ExtRealVisitor)
    }
}
