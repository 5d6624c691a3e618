//! Ryan eats a hot-dog. Unremarkable, unless Ryan is known to abstain
//! from pork: then the feature is what makes the situation worth telling.

use simplicity::generation::GenerationModel;
use simplicity::knowledge::{ingest_frequency_list, BeliefBase, KnowledgeBase, Proposition};
use simplicity::relevance::{
    evaluate_situation, feature_unexpectedness, DescriptionEstimator, FeatureLink, FeatureRef, ScoringOptions,
    SituationDescriptor,
};
use simplicity::Bits;

fn main() {
    let meals: Vec<(String, u64)> = ["sandwich", "salad", "pasta", "hot-dog", "soup", "sushi", "curry"]
        .iter()
        .enumerate()
        .map(|(i, m)| (m.to_string(), 100 - i as u64))
        .collect();
    let abstains = Proposition::atom("Ryan abstains from pork");
    let kb = KnowledgeBase::new(
        BeliefBase::new().with_scenario(Proposition::not(abstains.clone()), GenerationModel::fixed(20.0)),
    )
    .with_list(ingest_frequency_list("meals", meals).unwrap());

    let hot_dog = FeatureRef {
        name: "eats a hot-dog".into(),
        description: DescriptionEstimator::RankRef {
            list: "meals".into(),
            item: "hot-dog".into(),
        },
        generation_model: GenerationModel::ScenarioRef(Proposition::not(abstains)),
    };
    let opts = ScoringOptions::default();
    println!(
        "U(hot-dog) = {:.2}",
        feature_unexpectedness(&kb, &hot_dog, &opts).unwrap()
    );

    let lunch = SituationDescriptor::new(
        "Ryan's lunch",
        DescriptionEstimator::FeatureChain(vec![FeatureLink {
            feature: hot_dog,
            conditional_bits: Bits::from(1),
        }]),
        GenerationModel::fixed(28.0),
    );
    let r = evaluate_situation(&kb, &lunch, &opts).unwrap();
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
}
