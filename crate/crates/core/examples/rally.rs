//! "Students will be at the rally." "But people from Arcade will come too."
//!
//! f1: the participants are students. f2: I take part in the rally.
//! f3: the rally is a student rally.

use std::path::Path;

use simplicity::knowledge::{load_kb, KbDelta};
use simplicity::relevance::{two_relevance, ScoringOptions, SituationDescriptor};

fn read<T: serde::de::DeserializeOwned>(name: &str) -> T {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let kb = load_kb(&data.join("rally.kb.json")).unwrap();
    let s: SituationDescriptor = read("rally.situation.json");
    let opts = ScoringOptions::default();

    for delta in ["arcade.delta.json", "empty.delta.json"] {
        let t: KbDelta = read(delta);
        let r = two_relevance(&kb, &t, &s, &opts).unwrap();
        println!(
            "{delta:<18} U(s) = {:.2}  U(s|t) = {:.2}  delta = {:+.2}  2-relevant: {}",
            r.u_before, r.u_after, r.delta_u, r.two_relevant
        );
    }
}
