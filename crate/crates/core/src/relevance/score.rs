use serde::Serialize;

use super::emotion::{emotional_relevance, CheckedCombiner};
use super::situation::{DescriptionEstimator, FeatureRef, SituationDescriptor};
use super::{distance_decay, unexpectedness, RelevanceError};
use crate::bits::{self, Bits};
use crate::generation::{self, evaluate_with, BoundsTable, GenerationError, GenerationModel};
use crate::knowledge::{
    place_generation_complexity, temporal_location_complexity, witness_description_discount, KnowledgeBase,
    Proposition, UnknownItemPolicy,
};

/// How scenario references are turned into bits.
#[derive(Debug, Clone, Default)]
pub enum GenerationReadout {
    /// Cheapest known scenario.
    #[default]
    Scenarios,
    /// Estimates from a closed-world bounds table
    /// (see [`crate::generation::closed_world_bounds`]).
    Bounds(BoundsTable),
}

#[derive(Debug)]
pub struct ScoringOptions {
    pub unknown_items: UnknownItemPolicy,
    /// Reference distance for the distance penalty, same unit as descriptor distances.
    pub reference_distance: f64,
    pub combiner: CheckedCombiner,
    pub readout: GenerationReadout,
}

impl Default for ScoringOptions {
    fn default() -> Self {
        ScoringOptions {
            unknown_items: UnknownItemPolicy::Reject,
            reference_distance: 1.0,
            combiner: CheckedCombiner::default(),
            readout: GenerationReadout::Scenarios,
        }
    }
}

/// Marks figures that are one side of an inequality rather than an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundFlag {
    /// `C` came from a feature chain, an upper bound on the shortest description.
    DescriptionFeatureChainUpperBound,
    /// `C_w` sums the parts of a joint event, an upper bound.
    GenerationAndSumUpperBound,
    /// `C_w` is a floor implied by rules, not a known route.
    GenerationRuleFloor,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeatureContribution {
    pub feature: String,
    #[serde(with = "bits::real")]
    pub u: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelevanceReport {
    pub label: String,
    pub c: Bits,
    pub c_w: Bits,
    #[serde(with = "bits::real")]
    pub u: f64,
    pub relevant: bool,
    pub bound_flags: Vec<BoundFlag>,
    pub feature_contributions: Vec<FeatureContribution>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub emotional_relevance: Option<f64>,
    pub notes: Vec<String>,
}

struct Scorer<'a> {
    kb: &'a KnowledgeBase,
    opts: &'a ScoringOptions,
    readout: &'a GenerationReadout,
    flags: Vec<BoundFlag>,
    notes: Vec<String>,
}

impl<'a> Scorer<'a> {
    fn generation(&mut self, model: &GenerationModel) -> Result<Bits, GenerationError> {
        if model.uses_and_bound() {
            self.flags.push(BoundFlag::GenerationAndSumUpperBound);
        }
        match self.readout {
            GenerationReadout::Scenarios => {
                let beliefs = self.kb.beliefs();
                let value = generation::evaluate(model, beliefs)?;
                for p in model.references() {
                    self.notes.push(format!(
                        "scenario for {p}: {:.2} bits",
                        generation::scenario_complexity(beliefs, p)
                    ));
                }
                Ok(value)
            }
            GenerationReadout::Bounds(table) => {
                let mut readings = Vec::new();
                let value = evaluate_with(model, &mut |p: &Proposition| {
                    let estimate = table
                        .estimate(p)
                        .ok_or_else(|| GenerationError::UnresolvedScenario(p.clone()))?;
                    readings.push((p.clone(), estimate, table.get(p).upper.is_finite()));
                    Ok(estimate)
                })?;
                for (p, estimate, routed) in readings {
                    if routed {
                        self.notes
                            .push(format!("{p}: {estimate:.2} bits (cheapest known route)"));
                    } else {
                        self.flags.push(BoundFlag::GenerationRuleFloor);
                        self.notes
                            .push(format!("{p}: at least {estimate:.2} bits (no known route)"));
                    }
                }
                Ok(value)
            }
        }
    }

    fn description(&mut self, estimator: &DescriptionEstimator) -> Result<Bits, RelevanceError> {
        match estimator {
            DescriptionEstimator::RankRef { list, item } => {
                Ok(self.kb.list(list)?.item_complexity(item, self.opts.unknown_items)?)
            }
            DescriptionEstimator::ExplicitBits(bits) => Ok(*bits),
            DescriptionEstimator::FeatureChain(links) => {
                let last = links.last().ok_or(RelevanceError::EmptyFeatureChain)?;
                let mut total = last.conditional_bits;
                for link in links {
                    total = total + self.description(&link.feature.description)?;
                }
                Ok(total)
            }
        }
    }

    fn feature(&mut self, f: &FeatureRef) -> Result<f64, RelevanceError> {
        let c_w = self.generation(&f.generation_model)?;
        let c = self.description(&f.description)?;
        unexpectedness(c_w, c)
    }
}

/// `U(f(s)) = C_w(f(s)) − C(f)`; the feature is relevant when this is positive.
pub fn feature_unexpectedness(
    kb: &KnowledgeBase,
    f: &FeatureRef,
    opts: &ScoringOptions,
) -> Result<f64, RelevanceError> {
    Scorer {
        kb,
        opts,
        readout: &opts.readout,
        flags: Vec::new(),
        notes: Vec::new(),
    }
    .feature(f)
}

/// Scores a situation.
///
/// `C` is the cheapest description estimator, plus the cost of locating the
/// event in time, plus the indeterminacy among witnesses, plus the distance
/// penalty. `C_w` is the generation model, plus the cost of placing the
/// event among `n` locations.
pub fn evaluate_situation(
    kb: &KnowledgeBase,
    s: &SituationDescriptor,
    opts: &ScoringOptions,
) -> Result<RelevanceReport, RelevanceError> {
    evaluate_with_readout(kb, s, opts, &opts.readout)
}

pub(crate) fn evaluate_with_readout(
    kb: &KnowledgeBase,
    s: &SituationDescriptor,
    opts: &ScoringOptions,
    readout: &GenerationReadout,
) -> Result<RelevanceReport, RelevanceError> {
    let mut scorer = Scorer {
        kb,
        opts,
        readout,
        flags: Vec::new(),
        notes: Vec::new(),
    };

    let mut best: Option<(usize, Bits)> = None;
    for (i, estimator) in s.description_estimators.iter().enumerate() {
        let c = scorer.description(estimator)?;
        if best.is_none_or(|(_, b)| c < b) {
            best = Some((i, c));
        }
    }
    let (winner, mut c) = best.ok_or(RelevanceError::NoEstimator(s.label.clone()))?;
    scorer.notes.push(format!(
        "description: estimator {winner} ({}) wins with {c:.2} bits",
        estimator_kind(&s.description_estimators[winner])
    ));
    if matches!(s.description_estimators[winner], DescriptionEstimator::FeatureChain(_)) {
        scorer.flags.push(BoundFlag::DescriptionFeatureChainUpperBound);
    }
    if let Some(anchor) = &s.temporal {
        let t = temporal_location_complexity(anchor);
        scorer.notes.push(format!("temporal location: +{t:.2} bits"));
        c = c + t;
    }
    if let Some(anchor) = &s.place {
        let k = witness_description_discount(anchor);
        if k > Bits::ZERO {
            scorer.notes.push(format!("witness indeterminacy: +{k:.2} bits"));
        }
        c = c + k;
    }
    if let Some(d) = s.distance {
        let penalty = distance_decay(d, opts.reference_distance)?;
        scorer.notes.push(format!("distance: +{penalty:.2} bits"));
        c = c + penalty;
    }

    let mut c_w = scorer.generation(&s.generation())?;
    if let Some(anchor) = &s.place {
        let n = place_generation_complexity(anchor);
        scorer
            .notes
            .push(format!("place among {} locations: +{n:.2} bits", anchor.locations()));
        c_w = c_w + n;
    }

    let u = unexpectedness(c_w, c)?;

    let mut feature_contributions = Vec::new();
    for f in s.features() {
        feature_contributions.push(FeatureContribution {
            feature: f.name.clone(),
            u: scorer.feature(f)?,
        });
    }

    let mut flags = scorer.flags;
    flags.sort();
    flags.dedup();
    Ok(RelevanceReport {
        label: s.label.clone(),
        c,
        c_w,
        u,
        relevant: u > 0.0,
        bound_flags: flags,
        feature_contributions,
        emotional_relevance: s.emotion.map(|e| emotional_relevance(e, u, Some(&opts.combiner))),
        notes: scorer.notes,
    })
}

fn estimator_kind(e: &DescriptionEstimator) -> String {
    match e {
        DescriptionEstimator::RankRef { list, item } => format!("rank of `{item}` in `{list}`"),
        DescriptionEstimator::ExplicitBits(_) => "explicit".into(),
        DescriptionEstimator::FeatureChain(links) => format!(
            "features {}",
            links
                .iter()
                .map(|l| l.feature.name.as_str())
                .collect::<Vec<_>>()
                .join(" → ")
        ),
    }
}
