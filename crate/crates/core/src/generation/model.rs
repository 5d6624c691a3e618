use serde::{Deserialize, Serialize};

use super::GenerationError;
use crate::bits::Bits;
use crate::knowledge::Proposition;

/// An expression over generation machines. Evaluating it yields the number
/// of bits the world needs to produce the outcome.
///
/// JSON forms: `{"lottery":{"n":49,"draws":6}}`, `{"fixed":bits}`,
/// `{"product":[..]}`, `{"or":[..]}`, `{"and":[..]}`, `{"scenario_ref":<proposition>}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", try_from = "RawModel")]
pub enum GenerationModel {
    /// `draws` independent uniform choices among `n` outcomes.
    Lottery {
        n: u64,
        draws: u64,
    },
    Fixed(Bits),
    /// Independently generated parts: costs add.
    Product(Vec<GenerationModel>),
    /// Alternative routes: the cheapest wins.
    Or(Vec<GenerationModel>),
    /// Joint occurrence, costed by the sum of its parts (an upper bound).
    And(Vec<GenerationModel>),
    ScenarioRef(Proposition),
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum RawModel {
    Lottery { n: u64, draws: u64 },
    Fixed(Bits),
    Product(Vec<GenerationModel>),
    Or(Vec<GenerationModel>),
    And(Vec<GenerationModel>),
    ScenarioRef(Proposition),
}

impl TryFrom<RawModel> for GenerationModel {
    type Error = GenerationError;

    fn try_from(raw: RawModel) -> Result<Self, Self::Error> {
        Ok(match raw {
            RawModel::Lottery { n, draws } => GenerationModel::lottery(n, draws)?,
            RawModel::Fixed(bits) if !bits.is_finite() => {
                return Err(GenerationError::InvalidModel("fixed cost must be finite".into()))
            }
            RawModel::Fixed(bits) => GenerationModel::Fixed(bits),
            RawModel::Product(models) => GenerationModel::Product(models),
            RawModel::Or(models) if models.is_empty() => {
                return Err(GenerationError::InvalidModel(
                    "`or` needs at least one alternative".into(),
                ))
            }
            RawModel::Or(models) => GenerationModel::Or(models),
            RawModel::And(models) => GenerationModel::And(models),
            RawModel::ScenarioRef(p) => GenerationModel::ScenarioRef(p),
        })
    }
}

impl GenerationModel {
    pub fn lottery(n: u64, draws: u64) -> Result<Self, GenerationError> {
        if n == 0 || draws == 0 {
            return Err(GenerationError::InvalidModel(format!(
                "lottery needs n >= 1 and draws >= 1 (got n = {n}, draws = {draws})"
            )));
        }
        Ok(GenerationModel::Lottery { n, draws })
    }

    /// Panics on a negative or non-finite cost; use `Bits::new` + `Fixed` for untrusted input.
    pub fn fixed(bits: f64) -> Self {
        let bits = Bits::new(bits).expect("fixed cost must be non-negative");
        assert!(bits.is_finite(), "fixed cost must be finite");
        GenerationModel::Fixed(bits)
    }

    /// Propositions referenced anywhere in the expression.
    pub fn references(&self) -> Vec<&Proposition> {
        let mut out = Vec::new();
        self.collect_references(&mut out);
        out
    }

    fn collect_references<'a>(&'a self, out: &mut Vec<&'a Proposition>) {
        match self {
            GenerationModel::ScenarioRef(p) => out.push(p),
            GenerationModel::Product(ms) | GenerationModel::Or(ms) | GenerationModel::And(ms) => {
                ms.iter().for_each(|m| m.collect_references(out))
            }
            GenerationModel::Lottery { .. } | GenerationModel::Fixed(_) => {}
        }
    }

    /// Whether evaluation relies on the sum-of-parts bound for a joint event.
    pub fn uses_and_bound(&self) -> bool {
        match self {
            GenerationModel::And(ms) => ms.len() > 1 || ms.iter().any(Self::uses_and_bound),
            GenerationModel::Product(ms) | GenerationModel::Or(ms) => ms.iter().any(Self::uses_and_bound),
            _ => false,
        }
    }
}

/// `draws × log2(n)`.
pub fn lottery_complexity(n: u64, draws: u64) -> Result<Bits, GenerationError> {
    GenerationModel::lottery(n, draws)?;
    Ok(Bits::new(draws as f64 * (n as f64).log2()).expect("n >= 1"))
}

/// Evaluates `model`, resolving scenario references through `resolve`.
pub fn evaluate_with<F>(model: &GenerationModel, resolve: &mut F) -> Result<Bits, GenerationError>
where
    F: FnMut(&Proposition) -> Result<Bits, GenerationError>,
{
    match model {
        GenerationModel::Lottery { n, draws } => lottery_complexity(*n, *draws),
        GenerationModel::Fixed(bits) => Ok(*bits),
        GenerationModel::Product(ms) | GenerationModel::And(ms) => {
            let mut total = Bits::ZERO;
            for m in ms {
                total = total + evaluate_with(m, resolve)?;
            }
            Ok(total)
        }
        GenerationModel::Or(ms) => {
            let mut best = Bits::INFINITY;
            for m in ms {
                best = best.min(evaluate_with(m, resolve)?);
            }
            Ok(best)
        }
        GenerationModel::ScenarioRef(p) => resolve(p),
    }
}
