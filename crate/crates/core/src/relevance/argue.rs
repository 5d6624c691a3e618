use serde::Serialize;

use super::score::{evaluate_with_readout, GenerationReadout, RelevanceReport, ScoringOptions};
use super::situation::SituationDescriptor;
use super::RelevanceError;
use crate::bits;
use crate::generation::closed_world_bounds;
use crate::knowledge::{KbDelta, KnowledgeBase};

/// Effect of a piece of information `t` on the unexpectedness of `s`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwoRelevance {
    #[serde(with = "bits::real")]
    pub u_before: f64,
    #[serde(with = "bits::real")]
    pub u_after: f64,
    /// `U(s | t) − U(s)`.
    #[serde(with = "bits::real")]
    pub delta_u: f64,
    /// `U(s | t) < U(s)`.
    pub two_relevant: bool,
    pub before: RelevanceReport,
    pub after: RelevanceReport,
}

/// Scores `s` against `kb` and against `kb` extended with `t`.
///
/// Generation costs are read from closed-world bounds, so that rules can
/// carry a newly added scenario over to the propositions that `s` refers to.
pub fn two_relevance(
    kb: &KnowledgeBase,
    t: &KbDelta,
    s: &SituationDescriptor,
    opts: &ScoringOptions,
) -> Result<TwoRelevance, RelevanceError> {
    let refs = s.referenced_propositions();
    let score = |kb: &KnowledgeBase| -> Result<RelevanceReport, RelevanceError> {
        let table = closed_world_bounds(kb.beliefs(), &refs)?;
        evaluate_with_readout(kb, s, opts, &GenerationReadout::Bounds(table))
    };
    let before = score(kb)?;
    let extended = kb.clone().with_beliefs(kb.beliefs().apply(t)?);
    let after = score(&extended)?;
    let delta_u = if after.u == before.u { 0.0 } else { after.u - before.u };
    Ok(TwoRelevance {
        u_before: before.u,
        u_after: after.u,
        delta_u,
        two_relevant: after.u < before.u,
        before,
        after,
    })
}
