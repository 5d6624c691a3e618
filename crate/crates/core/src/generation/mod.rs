//! Generation complexity: what it costs the world, as the observer
//! understands it, to produce a situation.

mod bounds;
mod model;
mod mutability;
mod scenario;

pub use bounds::{closed_world_bounds, propagate_bounds, BoundViolation, Bounds, BoundsTable};
pub use model::{evaluate_with, lottery_complexity, GenerationModel};
pub use mutability::{
    mutability, mutability_inheritance_check, unpropagated_mutability_conflicts, MutabilityViolation,
};
pub use scenario::{evaluate, scenario_complexity};

use crate::knowledge::Proposition;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GenerationError {
    #[error("no scenario is known for {0}")]
    UnresolvedScenario(Proposition),
    #[error("invalid generation model: {0}")]
    InvalidModel(String),
    #[error("inconsistent bounds: {}", describe(.0))]
    InconsistentBounds(Vec<BoundViolation>),
}

fn describe(violations: &[BoundViolation]) -> String {
    violations
        .iter()
        .map(|v| format!("{} has lower {:.2} > upper {:.2}", v.target, v.lower, v.upper))
        .collect::<Vec<_>>()
        .join("; ")
}
