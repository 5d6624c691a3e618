use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::generation::GenerationModel;
use crate::knowledge::{PlaceAnchor, Proposition, TemporalAnchor};

/// A way for the observer to single something out.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DescriptionEstimator {
    /// Position of `item` in the named ranked list.
    RankRef {
        list: String,
        item: String,
    },
    ExplicitBits(Bits),
    /// Describe through features: `Σ C(f_i)` plus the conditional cost left
    /// after the last link.
    FeatureChain(Vec<FeatureLink>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureLink {
    pub feature: FeatureRef,
    /// Bits still needed to pin down the situation once the features up to
    /// and including this one are known.
    pub conditional_bits: Bits,
}

/// A feature `f` with both of its sides: the conceptual cost `C(f)` and
/// the cost `C_w(f(s))` for the world to make it hold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureRef {
    pub name: String,
    pub description: DescriptionEstimator,
    pub generation_model: GenerationModel,
}

/// Position on the observer's emotional scale. Only comparable within one observer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EmotionLevel(pub f64);

/// A situation to score.
///
/// When `generation_model` is absent the situation is generated by the
/// scenario registered for the atom named by its label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSituation")]
pub struct SituationDescriptor {
    pub label: String,
    pub description_estimators: Vec<DescriptionEstimator>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generation_model: Option<GenerationModel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub temporal: Option<TemporalAnchor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub place: Option<PlaceAnchor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub emotion: Option<EmotionLevel>,
    /// Distance from the observer, in the same unit as the scoring
    /// reference distance (km by default).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSituation {
    label: String,
    description_estimators: Vec<DescriptionEstimator>,
    #[serde(default)]
    generation_model: Option<GenerationModel>,
    #[serde(default)]
    temporal: Option<TemporalAnchor>,
    #[serde(default)]
    place: Option<PlaceAnchor>,
    #[serde(default)]
    emotion: Option<EmotionLevel>,
    #[serde(default)]
    distance: Option<f64>,
}

impl TryFrom<RawSituation> for SituationDescriptor {
    type Error = String;

    fn try_from(raw: RawSituation) -> Result<Self, Self::Error> {
        if raw.description_estimators.is_empty() {
            return Err(format!("situation `{}` has no description estimator", raw.label));
        }
        Ok(SituationDescriptor {
            label: raw.label,
            description_estimators: raw.description_estimators,
            generation_model: raw.generation_model,
            temporal: raw.temporal,
            place: raw.place,
            emotion: raw.emotion,
            distance: raw.distance,
        })
    }
}

impl SituationDescriptor {
    pub fn new(label: impl Into<String>, estimator: DescriptionEstimator, generation_model: GenerationModel) -> Self {
        SituationDescriptor {
            label: label.into(),
            description_estimators: vec![estimator],
            generation_model: Some(generation_model),
            temporal: None,
            place: None,
            emotion: None,
            distance: None,
        }
    }

    pub fn with_estimator(mut self, estimator: DescriptionEstimator) -> Self {
        self.description_estimators.push(estimator);
        self
    }

    pub fn with_temporal(mut self, anchor: TemporalAnchor) -> Self {
        self.temporal = Some(anchor);
        self
    }

    pub fn with_place(mut self, anchor: PlaceAnchor) -> Self {
        self.place = Some(anchor);
        self
    }

    pub fn with_emotion(mut self, e: f64) -> Self {
        self.emotion = Some(EmotionLevel(e));
        self
    }

    pub fn with_distance(mut self, d: f64) -> Self {
        self.distance = Some(d);
        self
    }

    /// The model that generates this situation.
    pub fn generation(&self) -> GenerationModel {
        self.generation_model
            .clone()
            .unwrap_or_else(|| GenerationModel::ScenarioRef(Proposition::atom(self.label.clone())))
    }

    /// Every proposition the scoring may need a generation estimate for.
    pub fn referenced_propositions(&self) -> Vec<Proposition> {
        let mut out: Vec<Proposition> = self.generation().references().into_iter().cloned().collect();
        for estimator in &self.description_estimators {
            collect_feature_refs(estimator, &mut out);
        }
        out.sort();
        out.dedup();
        out
    }

    /// Features of every feature-chain estimator, in order of appearance.
    pub fn features(&self) -> Vec<&FeatureRef> {
        self.description_estimators
            .iter()
            .filter_map(|e| match e {
                DescriptionEstimator::FeatureChain(links) => Some(links.iter().map(|l| &l.feature)),
                _ => None,
            })
            .flatten()
            .collect()
    }
}

fn collect_feature_refs(estimator: &DescriptionEstimator, out: &mut Vec<Proposition>) {
    if let DescriptionEstimator::FeatureChain(links) = estimator {
        for link in links {
            out.extend(link.feature.generation_model.references().into_iter().cloned());
            collect_feature_refs(&link.feature.description, out);
        }
    }
}
