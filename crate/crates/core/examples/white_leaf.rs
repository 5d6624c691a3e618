//! A binary tree five levels deep. Reaching any leaf costs five binary
//! choices; only a distinguished leaf is cheap to describe.

use simplicity::generation::GenerationModel;
use simplicity::knowledge::KnowledgeBase;
use simplicity::relevance::{evaluate_situation, DescriptionEstimator, ScoringOptions, SituationDescriptor};
use simplicity::Bits;

fn main() {
    let kb = KnowledgeBase::default();
    let opts = ScoringOptions::default();
    let tree = GenerationModel::lottery(2, 5).unwrap();

    for (label, c) in [("the only white leaf", 0u32), ("one of 32 identical leaves", 5)] {
        let s = SituationDescriptor::new(label, DescriptionEstimator::ExplicitBits(Bits::from(c)), tree.clone());
        let r = evaluate_situation(&kb, &s, &opts).unwrap();
        println!("{label:<28} C_w = {} C = {} U = {}", r.c_w, r.c, r.u);
    }
}
