//! A stranger's death: easy for the world, hard to describe.
//!
//! One death per week over a 40-year horizon, among seven billion people.

use simplicity::generation::GenerationModel;
use simplicity::knowledge::KnowledgeBase;
use simplicity::relevance::{evaluate_situation, DescriptionEstimator, ScoringOptions, SituationDescriptor};
use simplicity::Bits;

fn main() {
    let weeks = 52 * 40;
    let s = SituationDescriptor::new(
        "someone died",
        DescriptionEstimator::ExplicitBits(Bits::log2(7e9).unwrap()),
        GenerationModel::lottery(weeks, 1).unwrap(),
    );
    let r = evaluate_situation(&KnowledgeBase::default(), &s, &ScoringOptions::default()).unwrap();

    println!("C_w = {:.2} bits (which week)", r.c_w);
    println!("C   = {:.2} bits (which person)", r.c);
    println!("U   = {:.2} bits -> relevant: {}", r.u, r.relevant);

    // The same death, of someone at rank 3 in the observer's address book.
    let close = SituationDescriptor::new(
        "a friend died",
        DescriptionEstimator::ExplicitBits(Bits::from(2)),
        GenerationModel::lottery(weeks, 1).unwrap(),
    );
    let r = evaluate_situation(&KnowledgeBase::default(), &close, &ScoringOptions::default()).unwrap();
    println!("close friend: U = {:.2} bits -> relevant: {}", r.u, r.relevant);
}
