//! Which record is news? The holder of a record stands out from a class
//! of n members, minus what it takes to name the class and the feature.

use std::path::Path;

use simplicity::knowledge::KnowledgeBase;
use simplicity::relevance::{rank_records, RecordInput, ScoringOptions};

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/records.json");
    let records: Vec<RecordInput> = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();

    let ranked = rank_records(&KnowledgeBase::default(), &records, &ScoringOptions::default()).unwrap();
    for r in ranked {
        println!("{:>7.2}  {}", r.u, r.label);
    }
}
