//! Lottery draws: every combination costs the same to generate, but a few
//! are much simpler to describe.

use simplicity::generation::{lottery_complexity, GenerationModel};
use simplicity::knowledge::{ingest_frequency_list, KnowledgeBase};
use simplicity::relevance::{evaluate_situation, DescriptionEstimator, ScoringOptions, SituationDescriptor};

fn main() {
    println!("6 numbers out of 49: {:.2} bits", lottery_complexity(49, 6).unwrap());
    println!("same number twice:  {:.2} bits", lottery_complexity(49, 2).unwrap());

    let patterns = ingest_frequency_list(
        "remarkable draws",
        [("1-2-3-4-5-6", 40), ("7-14-21-28-35-42", 12), ("5-10-15-20-25-30", 9)],
    )
    .unwrap();
    let kb = KnowledgeBase::default().with_list(patterns);
    let opts = ScoringOptions::default();

    for item in ["1-2-3-4-5-6", "7-14-21-28-35-42", "5-10-15-20-25-30"] {
        let s = SituationDescriptor::new(
            format!("draw {item}"),
            DescriptionEstimator::RankRef {
                list: "remarkable draws".into(),
                item: item.into(),
            },
            GenerationModel::lottery(49, 6).unwrap(),
        );
        let r = evaluate_situation(&kb, &s, &opts).unwrap();
        println!("{item:<18} C = {} U = {:.2}", r.c, r.u);
    }
}
