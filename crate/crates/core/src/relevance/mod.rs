//! Unexpectedness and the relevance judgments built on it.
//!
//! Everything here is a pure function of an immutable knowledge base and
//! its inputs.

mod argue;
mod coincidence;
pub mod emotion;
mod record;
mod score;
mod situation;

pub use argue::{two_relevance, TwoRelevance};
pub use coincidence::{coincidence_unexpectedness, temporal_linkage_complexity, Observed};
pub use emotion::{combiner_by_name, emotional_relevance, CheckedCombiner, EmotionCombiner};
pub use record::{rank_records, record_unexpectedness, RankedRecord, RecordInput, RecordSummary};
pub use score::{
    evaluate_situation, feature_unexpectedness, BoundFlag, FeatureContribution, GenerationReadout, RelevanceReport,
    ScoringOptions,
};
pub use situation::{DescriptionEstimator, EmotionLevel, FeatureLink, FeatureRef, SituationDescriptor};

use crate::bits::Bits;
use crate::generation::GenerationError;
use crate::knowledge::KnowledgeError;

#[derive(Debug, thiserror::Error)]
pub enum RelevanceError {
    #[error(transparent)]
    Knowledge(#[from] KnowledgeError),
    #[error(transparent)]
    Generation(#[from] GenerationError),
    #[error("unexpectedness is undefined: both complexities are infinite")]
    Undefined,
    #[error("distance {d} is below the reference distance {reference}")]
    InvalidDistance { d: f64, reference: f64 },
    #[error("a record class needs at least one member")]
    EmptyClass,
    #[error("a feature chain needs at least one feature")]
    EmptyFeatureChain,
    #[error("situation `{0}` has no description estimator")]
    NoEstimator(String),
    #[error("unknown emotion combiner `{0}` (expected `additive` or `weighted:<w>` with w > 0)")]
    UnknownCombiner(String),
    #[error("combiner `{name}` decreases in {argument} near E = {emotion:.3}, U = {unexpectedness:.3}")]
    NonMonotoneCombiner {
        name: String,
        emotion: f64,
        unexpectedness: f64,
        argument: &'static str,
    },
}

/// `U = C_w − C`. Negative values mean "less than expected"; `+∞` when the
/// world has no known way to produce something the observer can describe.
pub fn unexpectedness(c_w: Bits, c: Bits) -> Result<f64, RelevanceError> {
    if !c_w.is_finite() && !c.is_finite() {
        return Err(RelevanceError::Undefined);
    }
    Ok(c_w.value() - c.value())
}

/// Description penalty for an event at distance `d`: `2·log2(d / reference)`.
pub fn distance_decay(d: f64, reference: f64) -> Result<Bits, RelevanceError> {
    if !(reference > 0.0) || !(d >= reference) || !d.is_finite() {
        return Err(RelevanceError::InvalidDistance { d, reference });
    }
    Ok(Bits::new(2.0 * (d / reference).log2()).expect("d >= reference"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(x: f64) -> Bits {
        Bits::new(x).unwrap()
    }

    #[test]
    fn unexpectedness_examples() {
        assert_eq!(unexpectedness(bits(11.0), bits(33.0)).unwrap(), -22.0);
        assert_eq!(unexpectedness(bits(5.0), bits(5.0)).unwrap(), 0.0);
        assert_eq!(unexpectedness(bits(5.0), bits(0.0)).unwrap(), 5.0);
        assert_eq!(unexpectedness(Bits::INFINITY, bits(3.0)).unwrap(), f64::INFINITY);
        assert!(matches!(
            unexpectedness(Bits::INFINITY, Bits::INFINITY),
            Err(RelevanceError::Undefined)
        ));
    }

    #[test]
    fn distance() {
        assert_eq!(distance_decay(1.0, 1.0).unwrap().value(), 0.0);
        assert_eq!(distance_decay(1024.0, 1.0).unwrap().value(), 20.0);
        assert_eq!(distance_decay(5120.0, 5.0).unwrap().value(), 20.0);
        let doubled = distance_decay(60.0, 1.0).unwrap().value() - distance_decay(30.0, 1.0).unwrap().value();
        assert!((doubled - 2.0).abs() < 1e-12);
        assert!(matches!(
            distance_decay(0.5, 1.0),
            Err(RelevanceError::InvalidDistance { .. })
        ));
        assert!(distance_decay(3.0, 0.0).is_err());
    }
}
