use super::RelevanceError;
use crate::bits::Bits;
use crate::knowledge::{temporal_location_complexity, TemporalAnchor};

/// Both complexities of one situation. For the second member of a
/// coincidence, `description` is conditional on the first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observed {
    pub generation: Bits,
    pub description: Bits,
}

/// Lower bound on the unexpectedness of two independently generated
/// situations occurring together:
/// `C_w(s1) + C_w(s2) − C(s1) − C(s2 | s1)`.
///
/// The caller asserts independence (joint generation cost is the sum).
pub fn coincidence_unexpectedness(first: Observed, second_given_first: Observed) -> Result<f64, RelevanceError> {
    let u = (first.generation + second_given_first.generation).value()
        - (first.description + second_given_first.description).value();
    if u.is_nan() {
        return Err(RelevanceError::Undefined);
    }
    Ok(u)
}

/// Bits needed to locate the second event from the first when they are
/// `delta` apart at granularity `a`: `log2(delta / a)`.
pub fn temporal_linkage_complexity(delta: f64, a: f64) -> Result<Bits, RelevanceError> {
    Ok(temporal_location_complexity(&TemporalAnchor::new(delta, a)?))
}
