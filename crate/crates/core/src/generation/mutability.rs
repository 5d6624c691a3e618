use serde::Serialize;

use super::bounds::fixpoint;
use super::scenario::scenario_complexity;
use super::BoundsTable;
use crate::knowledge::{BeliefBase, Proposition, Rule};

/// How cheaply belief in `f` could be overturned: minus the cost of the
/// cheapest scenario for `¬f`. Never positive; `-∞` when no such scenario
/// is known.
pub fn mutability(kb: &BeliefBase, f: &Proposition) -> f64 {
    -scenario_complexity(kb, &f.negated()).value()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MutabilityViolation {
    pub rule: Rule,
    #[serde(with = "crate::bits::real")]
    pub antecedent_mutability: f64,
    #[serde(with = "crate::bits::real")]
    pub consequent_mutability: f64,
}

/// Rules `a ⊃ b` for which `M(a) < M(b)`, with `M(x) = −upper(¬x)` read
/// from the propagated bounds table.
pub fn mutability_inheritance_check(kb: &BeliefBase) -> Vec<MutabilityViolation> {
    let (table, _) = fixpoint(kb, &BoundsTable::new());
    violations(kb, |p| -table.get(&p.negated()).upper.value())
}

/// The same check on raw scenario costs, before any propagation. A rule
/// listed here is one whose mutability the propagation has to inherit.
pub fn unpropagated_mutability_conflicts(kb: &BeliefBase) -> Vec<MutabilityViolation> {
    violations(kb, |p| mutability(kb, p))
}

fn violations(kb: &BeliefBase, m: impl Fn(&Proposition) -> f64) -> Vec<MutabilityViolation> {
    kb.rules()
        .iter()
        .filter_map(|rule| {
            let (ma, mb) = (m(&rule.antecedent), m(&rule.consequent));
            // -inf >= -inf holds
            (ma < mb).then(|| MutabilityViolation {
                rule: rule.clone(),
                antecedent_mutability: ma,
                consequent_mutability: mb,
            })
        })
        .collect()
}
