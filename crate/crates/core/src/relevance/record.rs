use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::score::{evaluate_situation, ScoringOptions};
use super::situation::SituationDescriptor;
use super::RelevanceError;
use crate::bits::{self, Bits};
use crate::knowledge::KnowledgeBase;

/// Unexpectedness of the one member of a class of `n` that holds a record:
/// `log2 n − C(r) − C(f | r)`.
pub fn record_unexpectedness(n: u64, c_class: Bits, c_feature_given_class: Bits) -> Result<f64, RelevanceError> {
    if n == 0 {
        return Err(RelevanceError::EmptyClass);
    }
    super::unexpectedness(Bits::log2(n as f64).expect("n >= 1"), c_class + c_feature_given_class)
}

/// A record given by its class size and description costs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordSummary {
    pub label: String,
    pub n: u64,
    pub c_class: Bits,
    pub c_feature_given_class: Bits,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RecordInput {
    Summary(RecordSummary),
    Situation(SituationDescriptor),
}

impl RecordInput {
    pub fn label(&self) -> &str {
        match self {
            RecordInput::Summary(r) => &r.label,
            RecordInput::Situation(s) => &s.label,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedRecord {
    pub label: String,
    #[serde(with = "bits::real")]
    pub u: f64,
    pub relevant: bool,
}

/// Scores every record and sorts by decreasing unexpectedness, ties by label.
pub fn rank_records(
    kb: &KnowledgeBase,
    records: &[RecordInput],
    opts: &ScoringOptions,
) -> Result<Vec<RankedRecord>, RelevanceError> {
    let mut out = records
        .iter()
        .map(|r| {
            let u = match r {
                RecordInput::Summary(s) => record_unexpectedness(s.n, s.c_class, s.c_feature_given_class)?,
                RecordInput::Situation(s) => evaluate_situation(kb, s, opts)?.u,
            };
            Ok(RankedRecord {
                label: r.label().to_string(),
                u,
                relevant: u > 0.0,
            })
        })
        .collect::<Result<Vec<_>, RelevanceError>>()?;
    out.sort_by(|a, b| match b.u.total_cmp(&a.u) {
        Ordering::Equal => a.label.cmp(&b.label),
        o => o,
    });
    Ok(out)
}
