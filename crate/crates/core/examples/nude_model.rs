//! An encounter with a nude model, scored under different contexts:
//! how long ago, how far away, how many witnesses, and whether a second
//! encounter follows.

use simplicity::generation::GenerationModel;
use simplicity::knowledge::{KnowledgeBase, PlaceAnchor, TemporalAnchor};
use simplicity::relevance::{
    coincidence_unexpectedness, evaluate_situation, temporal_linkage_complexity, DescriptionEstimator, Observed,
    ScoringOptions, SituationDescriptor,
};
use simplicity::Bits;

fn encounter() -> SituationDescriptor {
    SituationDescriptor::new(
        "met a nude model",
        DescriptionEstimator::ExplicitBits(Bits::new(10.0).unwrap()),
        GenerationModel::fixed(24.0),
    )
}

fn main() {
    let kb = KnowledgeBase::default();
    let opts = ScoringOptions {
        reference_distance: 1.0,
        ..ScoringOptions::default()
    };
    let u = |s: &SituationDescriptor| evaluate_situation(&kb, s, &opts).unwrap().u;

    println!("recency (weeks ago, a = 1 week)");
    for t in [1.0, 4.0, 52.0, 520.0] {
        let s = encounter().with_temporal(TemporalAnchor::new(t, 1.0).unwrap());
        println!("  {t:>5}: U = {:.2}", u(&s));
    }

    println!("distance (km)");
    for d in [1.0, 10.0, 100.0] {
        let s = encounter().with_distance(d);
        println!("  {d:>5}: U = {:.2}", u(&s));
    }

    println!("place: a town of 20000 people");
    for k in [1, 2, 50] {
        let s = encounter().with_place(PlaceAnchor::new(20_000, k).unwrap());
        println!("  {k:>3} witnesses: U = {:.2}", u(&s));
    }

    let first = Observed {
        generation: Bits::new(24.0).unwrap(),
        description: Bits::new(10.0).unwrap(),
    };
    println!("second encounter with the same model");
    for (when, delta) in [("the next day", 1.0), ("a year later", 365.0)] {
        let linkage = temporal_linkage_complexity(delta, 1.0).unwrap();
        let second = Observed {
            generation: Bits::new(24.0).unwrap(),
            description: Bits::new(1.0).unwrap() + linkage,
        };
        println!(
            "  {when}: U >= {:.2}",
            coincidence_unexpectedness(first, second).unwrap()
        );
    }
}
