use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::KnowledgeError;
use crate::bits::Bits;
use crate::codec::{code_length, encode_rank, CodeWord, Rank};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub item: String,
    pub count: u64,
}

/// Items ordered by salience. Position in `entries` is the rank.
///
/// Sorted by count descending, ties broken by item name; item names are unique.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedList {
    name: String,
    entries: Vec<Entry>,
}

/// What to do when an item is not in the list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnknownItemPolicy {
    #[default]
    Reject,
    /// Treat the item as ranked one past the end of the list.
    RankPastEnd,
}

pub fn ingest_frequency_list<I, S>(name: &str, records: I) -> Result<RankedList, KnowledgeError>
where
    I: IntoIterator<Item = (S, u64)>,
    S: Into<String>,
{
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for (item, count) in records {
        let item = item.into();
        if !seen.insert(item.clone()) {
            return Err(KnowledgeError::DuplicateItem {
                list: name.to_string(),
                item,
            });
        }
        entries.push(Entry { item, count });
    }
    if entries.is_empty() {
        return Err(KnowledgeError::EmptyInput(name.to_string()));
    }
    entries.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.item.cmp(&b.item)));
    Ok(RankedList {
        name: name.to_string(),
        entries,
    })
}

impl RankedList {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rank_of(&self, item: &str) -> Option<Rank> {
        self.entries.iter().position(|e| e.item == item).map(|i| Rank(i as u64))
    }

    /// Rows of `(rank, entry, code word, complexity)` in rank order.
    pub fn table(&self) -> impl Iterator<Item = (Rank, &Entry, CodeWord, Bits)> {
        self.entries.iter().enumerate().map(|(i, e)| {
            let rank = Rank(i as u64);
            (rank, e, encode_rank(rank), code_length(rank))
        })
    }

    pub fn item_complexity(&self, item: &str, policy: UnknownItemPolicy) -> Result<Bits, KnowledgeError> {
        match (self.rank_of(item), policy) {
            (Some(rank), _) => Ok(code_length(rank)),
            (None, UnknownItemPolicy::RankPastEnd) => Ok(code_length(Rank(self.len() as u64))),
            (None, UnknownItemPolicy::Reject) => Err(KnowledgeError::UnknownItem {
                list: self.name.clone(),
                item: item.to_string(),
            }),
        }
    }
}

// Deserialization re-runs ingestion so a hand-edited file cannot break the ordering invariant.
impl<'de> Deserialize<'de> for RankedList {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            name: String,
            entries: Vec<Entry>,
        }
        let raw = Raw::deserialize(deserializer)?;
        ingest_frequency_list(&raw.name, raw.entries.into_iter().map(|e| (e.item, e.count)))
            .map_err(serde::de::Error::custom)
    }
}
