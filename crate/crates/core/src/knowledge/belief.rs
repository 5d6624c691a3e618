use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{KnowledgeError, Proposition};
use crate::generation::{Bounds, BoundsTable, GenerationModel};

/// `antecedent ⊃ consequent`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Rule {
    pub antecedent: Proposition,
    pub consequent: Proposition,
}

impl Rule {
    pub fn new(antecedent: Proposition, consequent: Proposition) -> Self {
        Rule {
            antecedent: antecedent.canonical(),
            consequent: consequent.canonical(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioEntry {
    pub target: Proposition,
    pub model: GenerationModel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub target: Proposition,
    #[serde(default)]
    pub lower: crate::bits::Bits,
    #[serde(default = "unbounded")]
    pub upper: crate::bits::Bits,
}

fn unbounded() -> crate::bits::Bits {
    crate::bits::Bits::INFINITY
}

/// The observer's causal beliefs: facts held true, candidate generation
/// scenarios per proposition, implications, and asserted complexity bounds.
///
/// Values are immutable; every `with_*` method returns a new version.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BeliefBase {
    facts: BTreeSet<Proposition>,
    scenarios: BTreeMap<Proposition, Vec<GenerationModel>>,
    rules: BTreeSet<Rule>,
    asserted: BoundsTable,
}

impl BeliefBase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_fact(mut self, fact: Proposition) -> Result<Self, KnowledgeError> {
        let fact = fact.canonical();
        if self.facts.contains(&fact.negated()) {
            return Err(KnowledgeError::ContradictoryFact(fact));
        }
        self.facts.insert(fact);
        Ok(self)
    }

    pub fn with_scenario(mut self, target: Proposition, model: GenerationModel) -> Self {
        self.scenarios.entry(target.canonical()).or_default().push(model);
        self
    }

    pub fn with_rule(mut self, antecedent: Proposition, consequent: Proposition) -> Self {
        self.rules.insert(Rule::new(antecedent, consequent));
        self
    }

    /// Asserts bounds on the generation complexity of `target`, intersecting
    /// with any bounds already asserted for it.
    pub fn with_bounds(mut self, target: Proposition, bounds: Bounds) -> Result<Self, KnowledgeError> {
        let target = target.canonical();
        if bounds.lower > bounds.upper {
            return Err(KnowledgeError::InvalidBounds {
                target,
                lower: bounds.lower,
                upper: bounds.upper,
            });
        }
        self.asserted.tighten(&target, bounds);
        Ok(self)
    }

    pub fn apply(&self, delta: &KbDelta) -> Result<BeliefBase, KnowledgeError> {
        let mut next = self.clone();
        for fact in &delta.facts {
            next = next.with_fact(fact.clone())?;
        }
        for entry in &delta.scenarios {
            next = next.with_scenario(entry.target.clone(), entry.model.clone());
        }
        for rule in &delta.rules {
            next = next.with_rule(rule.antecedent.clone(), rule.consequent.clone());
        }
        for entry in &delta.bounds {
            next = next.with_bounds(
                entry.target.clone(),
                Bounds {
                    lower: entry.lower,
                    upper: entry.upper,
                },
            )?;
        }
        Ok(next)
    }

    pub fn facts(&self) -> &BTreeSet<Proposition> {
        &self.facts
    }

    pub fn scenarios_for(&self, target: &Proposition) -> &[GenerationModel] {
        self.scenarios.get(target).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn scenarios(&self) -> impl Iterator<Item = (&Proposition, &GenerationModel)> {
        self.scenarios
            .iter()
            .flat_map(|(target, models)| models.iter().map(move |m| (target, m)))
    }

    pub fn rules(&self) -> &BTreeSet<Rule> {
        &self.rules
    }

    pub fn asserted_bounds(&self) -> &BoundsTable {
        &self.asserted
    }
}

/// Additions to a belief base: the `t` of a second-order relevance judgment.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KbDelta {
    #[serde(default)]
    pub facts: Vec<Proposition>,
    #[serde(default)]
    pub scenarios: Vec<ScenarioEntry>,
    #[serde(default)]
    pub rules: Vec<Rule>,
    #[serde(default)]
    pub bounds: Vec<BoundEntry>,
}

impl KbDelta {
    pub fn is_empty(&self) -> bool {
        self.facts.is_empty() && self.scenarios.is_empty() && self.rules.is_empty() && self.bounds.is_empty()
    }
}
