use std::path::Path;

use simplicity::generation::{mutability, mutability_inheritance_check, unpropagated_mutability_conflicts};
use simplicity::knowledge::{load_kb, Proposition};

fn main() {
    let kb = load_kb(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/mutability.kb.json")).unwrap();
    let beliefs = kb.beliefs();

    for belief in [
        "bank balance positive",
        "Paris is the capital",
        "rent paid",
        "the sun rises",
    ] {
        println!("M({belief}) = {}", mutability(beliefs, &Proposition::atom(belief)));
    }

    for v in unpropagated_mutability_conflicts(beliefs) {
        println!(
            "rule {} ⊃ {}: raw M {} < {}, inherited after propagation",
            v.rule.antecedent, v.rule.consequent, v.antecedent_mutability, v.consequent_mutability
        );
    }
    assert!(mutability_inheritance_check(beliefs).is_empty());
}
