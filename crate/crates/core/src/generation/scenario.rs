use super::model::evaluate_with;
use super::{GenerationError, GenerationModel};
use crate::bits::Bits;
use crate::knowledge::{BeliefBase, Proposition};

/// Cheapest known way for the world to produce `target`.
///
/// Registered scenarios compete with structural decomposition of compound
/// propositions (`∨` takes the cheaper side, `∧` adds both, `a ⊃ b` is read
/// as `¬a ∨ b`). `+∞` means no route is known.
pub fn scenario_complexity(kb: &BeliefBase, target: &Proposition) -> Bits {
    Resolver::new(kb).route(target).unwrap_or(Bits::INFINITY)
}

/// Evaluates a generation model against the scenarios of `kb`.
pub fn evaluate(model: &GenerationModel, kb: &BeliefBase) -> Result<Bits, GenerationError> {
    let mut resolver = Resolver::new(kb);
    evaluate_with(model, &mut |p: &Proposition| {
        resolver
            .route(p)
            .ok_or_else(|| GenerationError::UnresolvedScenario(p.clone()))
    })
}

/// Scenario lookup with cycle cutting: a scenario that needs its own target
/// to be generated first contributes nothing (`+∞`) along that path.
pub(crate) struct Resolver<'a> {
    kb: &'a BeliefBase,
    in_progress: Vec<Proposition>,
}

impl<'a> Resolver<'a> {
    pub(crate) fn new(kb: &'a BeliefBase) -> Self {
        Resolver {
            kb,
            in_progress: Vec::new(),
        }
    }

    /// `None` when neither a scenario nor a decomposition exists for `target`.
    pub(crate) fn route(&mut self, target: &Proposition) -> Option<Bits> {
        if self.in_progress.contains(target) {
            return Some(Bits::INFINITY);
        }
        self.in_progress.push(target.clone());

        let direct = self.kb.scenarios_for(target);
        let mut best = if direct.is_empty() {
            None
        } else {
            let mut cheapest = Bits::INFINITY;
            for model in direct {
                // a scenario that cannot be fully evaluated is not a usable route
                let cost = evaluate_with(model, &mut |p: &Proposition| {
                    Ok(self.route(p).unwrap_or(Bits::INFINITY))
                })
                .unwrap_or(Bits::INFINITY);
                cheapest = cheapest.min(cost);
            }
            Some(cheapest)
        };

        let decomposed = match target {
            Proposition::Or(a, b) => self.either(a, b),
            Proposition::Implies(a, b) => self.either(&a.negated(), b),
            Proposition::And(a, b) => match (self.route(a), self.route(b)) {
                (Some(x), Some(y)) => Some(x + y),
                _ => None,
            },
            _ => None,
        };
        if let Some(d) = decomposed {
            best = Some(best.map_or(d, |b| b.min(d)));
        }

        self.in_progress.pop();
        best
    }

    fn either(&mut self, a: &Proposition, b: &Proposition) -> Option<Bits> {
        match (self.route(a), self.route(b)) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        }
    }
}
