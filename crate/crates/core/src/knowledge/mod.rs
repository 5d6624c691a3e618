//! The observer's memory: ranked lists, context anchors, and beliefs.

mod anchors;
mod belief;
mod proposition;
mod ranked;
mod store;

use std::path::Path;

pub use anchors::{
    place_generation_complexity, temporal_location_complexity, witness_description_discount, PlaceAnchor,
    TemporalAnchor,
};
pub use belief::{BeliefBase, BoundEntry, KbDelta, Rule, ScenarioEntry};
pub use proposition::Proposition;
pub use ranked::{ingest_frequency_list, Entry, RankedList, UnknownItemPolicy};
pub use store::{load_frequency_csv, load_kb, read_frequency_csv, save_kb, KnowledgeBase, SCHEMA_VERSION};

use crate::bits::Bits;

#[derive(Debug, thiserror::Error)]
pub enum KnowledgeError {
    #[error("frequency list `{0}` has no records")]
    EmptyInput(String),
    #[error("duplicate item `{item}` in list `{list}`")]
    DuplicateItem { list: String, item: String },
    #[error("item `{item}` is not in list `{list}`")]
    UnknownItem { list: String, item: String },
    #[error("no ranked list named `{0}`")]
    UnknownList(String),
    #[error("invalid anchor: {0}")]
    InvalidAnchor(String),
    #[error("fact {0} contradicts a fact already held")]
    ContradictoryFact(Proposition),
    #[error("bounds for {target} are inverted: lower {lower} > upper {upper}")]
    InvalidBounds {
        target: Proposition,
        lower: Bits,
        upper: Bits,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema version {found} is not supported (expected {expected})")]
    SchemaVersionMismatch { found: String, expected: u32 },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl KnowledgeError {
    pub(crate) fn from_json(e: serde_json::Error) -> Self {
        KnowledgeError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }

    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        KnowledgeError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}
