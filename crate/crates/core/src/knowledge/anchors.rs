use serde::{Deserialize, Serialize};

use super::KnowledgeError;
use crate::bits::Bits;

/// When an event happened: `t` time units ago, at granularity `a`
/// (the typical duration of such an episode, same unit as `t`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTemporal")]
pub struct TemporalAnchor {
    t: f64,
    a: f64,
}

#[derive(Deserialize)]
struct RawTemporal {
    t: f64,
    a: f64,
}

impl TryFrom<RawTemporal> for TemporalAnchor {
    type Error = KnowledgeError;

    fn try_from(raw: RawTemporal) -> Result<Self, Self::Error> {
        TemporalAnchor::new(raw.t, raw.a)
    }
}

impl TemporalAnchor {
    /// An event cannot be located more precisely than its own granularity, so `t >= a > 0`.
    pub fn new(t: f64, a: f64) -> Result<Self, KnowledgeError> {
        if !(a > 0.0) || !(t >= a) || !t.is_finite() {
            return Err(KnowledgeError::InvalidAnchor(format!(
                "temporal anchor needs t >= a > 0 (got t = {t}, a = {a})"
            )));
        }
        Ok(TemporalAnchor { t, a })
    }

    pub fn elapsed(&self) -> f64 {
        self.t
    }

    pub fn granularity(&self) -> f64 {
        self.a
    }
}

/// Bits needed to locate an event `t` back in time at granularity `a`: `log2(t / a)`.
pub fn temporal_location_complexity(anchor: &TemporalAnchor) -> Bits {
    Bits::log2(anchor.t / anchor.a).expect("anchor invariant t >= a")
}

/// Where an event happened: one of `n` distinguishable locations, holding
/// `k` equivalent occupants or witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPlace")]
pub struct PlaceAnchor {
    n: u64,
    k: u64,
}

#[derive(Deserialize)]
struct RawPlace {
    n: u64,
    #[serde(default = "one")]
    k: u64,
}

fn one() -> u64 {
    1
}

impl TryFrom<RawPlace> for PlaceAnchor {
    type Error = KnowledgeError;

    fn try_from(raw: RawPlace) -> Result<Self, Self::Error> {
        PlaceAnchor::new(raw.n, raw.k)
    }
}

impl PlaceAnchor {
    /// `k` counts people and `n` counts places, so `k > n` is allowed.
    pub fn new(n: u64, k: u64) -> Result<Self, KnowledgeError> {
        if n == 0 || k == 0 {
            return Err(KnowledgeError::InvalidAnchor(format!(
                "place anchor needs n >= 1 and k >= 1 (got n = {n}, k = {k})"
            )));
        }
        Ok(PlaceAnchor { n, k })
    }

    pub fn locations(&self) -> u64 {
        self.n
    }

    pub fn witnesses(&self) -> u64 {
        self.k
    }
}

/// Cost for the world of putting the event in one specific place: `log2(n)`.
pub fn place_generation_complexity(anchor: &PlaceAnchor) -> Bits {
    Bits::log2(anchor.n as f64).expect("n >= 1")
}

/// Indeterminacy among `k` candidates: `log2(k)`, added on the description side.
pub fn witness_description_discount(anchor: &PlaceAnchor) -> Bits {
    Bits::log2(anchor.k as f64).expect("k >= 1")
}
