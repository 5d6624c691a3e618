//! Knowledge-base files and frequency-list CSV ingestion.
//!
//! The knowledge-base file is a single JSON object:
//!
//! ```json
//! {
//!   "version": 1,
//!   "lists": [{"name": "...", "entries": [{"item": "...", "count": 0}]}],
//!   "facts": [<proposition>],
//!   "scenarios": [{"target": <proposition>, "model": <generation model>}],
//!   "rules": [{"antecedent": <proposition>, "consequent": <proposition>}],
//!   "bounds": [{"target": <proposition>, "lower": 0, "upper": "inf"}]
//! }
//! ```
//!
//! `bounds` is optional and omitted when empty.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::belief::{BoundEntry, ScenarioEntry};
use super::{ingest_frequency_list, BeliefBase, KnowledgeError, Proposition, RankedList, Rule};
use crate::generation::Bounds;

pub const SCHEMA_VERSION: u32 = 1;

/// Ranked lists plus the belief base: everything the observer knows.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct KnowledgeBase {
    lists: BTreeMap<String, RankedList>,
    beliefs: BeliefBase,
}

impl KnowledgeBase {
    pub fn new(beliefs: BeliefBase) -> Self {
        KnowledgeBase {
            lists: BTreeMap::new(),
            beliefs,
        }
    }

    /// Adds `list`, replacing any list with the same name.
    pub fn with_list(mut self, list: RankedList) -> Self {
        self.lists.insert(list.name().to_string(), list);
        self
    }

    pub fn with_beliefs(mut self, beliefs: BeliefBase) -> Self {
        self.beliefs = beliefs;
        self
    }

    pub fn list(&self, name: &str) -> Result<&RankedList, KnowledgeError> {
        self.lists
            .get(name)
            .ok_or_else(|| KnowledgeError::UnknownList(name.to_string()))
    }

    pub fn lists(&self) -> impl Iterator<Item = &RankedList> {
        self.lists.values()
    }

    pub fn beliefs(&self) -> &BeliefBase {
        &self.beliefs
    }

    pub fn to_json(&self) -> String {
        let file = KbFile {
            version: SCHEMA_VERSION,
            lists: self.lists.values().cloned().collect(),
            facts: self.beliefs.facts().iter().cloned().collect(),
            scenarios: self
                .beliefs
                .scenarios()
                .map(|(target, model)| ScenarioEntry {
                    target: target.clone(),
                    model: model.clone(),
                })
                .collect(),
            rules: self.beliefs.rules().iter().cloned().collect(),
            bounds: self
                .beliefs
                .asserted_bounds()
                .iter()
                .map(|(target, b)| BoundEntry {
                    target: target.clone(),
                    lower: b.lower,
                    upper: b.upper,
                })
                .collect(),
        };
        let mut json = serde_json::to_string_pretty(&file).expect("knowledge base serializes");
        json.push('\n');
        json
    }

    pub fn from_json(text: &str) -> Result<Self, KnowledgeError> {
        // Check the version first so an old or future file gets a precise error.
        #[derive(Deserialize)]
        struct VersionProbe {
            version: Option<serde_json::Value>,
        }
        let probe: VersionProbe = serde_json::from_str(text).map_err(KnowledgeError::from_json)?;
        match probe.version {
            None => {
                return Err(KnowledgeError::Parse {
                    line: 1,
                    column: 1,
                    message: "missing field `version`".into(),
                })
            }
            Some(v) if v.as_u64() != Some(u64::from(SCHEMA_VERSION)) => {
                return Err(KnowledgeError::SchemaVersionMismatch {
                    found: v.to_string(),
                    expected: SCHEMA_VERSION,
                })
            }
            Some(_) => {}
        }

        let file: KbFile = serde_json::from_str(text).map_err(KnowledgeError::from_json)?;
        let mut beliefs = BeliefBase::new();
        for fact in file.facts {
            beliefs = beliefs.with_fact(fact)?;
        }
        for ScenarioEntry { target, model } in file.scenarios {
            beliefs = beliefs.with_scenario(target, model);
        }
        for Rule { antecedent, consequent } in file.rules {
            beliefs = beliefs.with_rule(antecedent, consequent);
        }
        for BoundEntry { target, lower, upper } in file.bounds {
            beliefs = beliefs.with_bounds(target, Bounds { lower, upper })?;
        }
        let mut kb = KnowledgeBase::new(beliefs);
        for list in file.lists {
            if kb.lists.contains_key(list.name()) {
                return Err(KnowledgeError::Parse {
                    line: 0,
                    column: 0,
                    message: format!("list `{}` defined twice", list.name()),
                });
            }
            kb = kb.with_list(list);
        }
        Ok(kb)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KbFile {
    version: u32,
    #[serde(default)]
    lists: Vec<RankedList>,
    #[serde(default)]
    facts: Vec<Proposition>,
    #[serde(default)]
    scenarios: Vec<ScenarioEntry>,
    #[serde(default)]
    rules: Vec<Rule>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    bounds: Vec<BoundEntry>,
}

pub fn save_kb(path: &Path, kb: &KnowledgeBase) -> Result<(), KnowledgeError> {
    fs::write(path, kb.to_json()).map_err(|e| KnowledgeError::io(path, e))
}

pub fn load_kb(path: &Path) -> Result<KnowledgeBase, KnowledgeError> {
    let text = fs::read_to_string(path).map_err(|e| KnowledgeError::io(path, e))?;
    KnowledgeBase::from_json(&text)
}

/// Reads an `item,count` CSV into a ranked list.
pub fn read_frequency_csv<R: Read>(name: &str, reader: R) -> Result<RankedList, KnowledgeError> {
    let mut csv = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = csv.headers().map_err(csv_error)?.clone();
    if headers.len() != 2 || &headers[0] != "item" || &headers[1] != "count" {
        return Err(KnowledgeError::Parse {
            line: 1,
            column: 1,
            message: format!(
                "expected header `item,count`, found `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }
    let mut records = Vec::new();
    for row in csv.records() {
        let row = row.map_err(csv_error)?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        let count = row[1].parse::<u64>().map_err(|e| KnowledgeError::Parse {
            line,
            column: 2,
            message: format!("field `count`: {e} (`{}`)", &row[1]),
        })?;
        records.push((row[0].to_string(), count));
    }
    ingest_frequency_list(name, records)
}

pub fn load_frequency_csv(name: &str, path: &Path) -> Result<RankedList, KnowledgeError> {
    let file = fs::File::open(path).map_err(|e| KnowledgeError::io(path, e))?;
    read_frequency_csv(name, file)
}

fn csv_error(e: csv::Error) -> KnowledgeError {
    let line = e.position().map_or(0, |p| p.line() as usize);
    KnowledgeError::Parse {
        line,
        column: 0,
        message: e.to_string(),
    }
}
