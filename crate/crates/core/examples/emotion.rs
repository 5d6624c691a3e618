use simplicity::relevance::emotion::{FnCombiner, DEFAULT_SEED};
use simplicity::relevance::{combiner_by_name, emotional_relevance, CheckedCombiner, EmotionLevel};

fn main() {
    let e = EmotionLevel(3.0);
    println!("additive:   {}", emotional_relevance(e, 4.0, None));

    let weighted = CheckedCombiner::new(combiner_by_name("weighted:2").unwrap(), DEFAULT_SEED).unwrap();
    println!("weighted:2: {}", emotional_relevance(e, 4.0, Some(&weighted)));

    let softmax = FnCombiner {
        name: "log-sum-exp".into(),
        f: |e: f64, u: f64| (e.exp() + u.exp()).ln(),
    };
    let softmax = CheckedCombiner::new(Box::new(softmax), DEFAULT_SEED).unwrap();
    println!("{}: {:.3}", softmax.name(), emotional_relevance(e, 4.0, Some(&softmax)));

    let backwards = FnCombiner {
        name: "e-minus-u".into(),
        f: |e: f64, u: f64| e - u,
    };
    match CheckedCombiner::new(Box::new(backwards), DEFAULT_SEED) {
        Ok(_) => unreachable!(),
        Err(err) => println!("rejected: {err}"),
    }
}
