//! Combining emotional intensity with unexpectedness.
//!
//! The only constraint on the combination is that it increases with both
//! arguments. [`Additive`] is the default and should be read as a
//! placeholder; any other monotone function can be plugged in.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EmotionLevel, RelevanceError};

pub const DEFAULT_SEED: u64 = 0x5eed;

const SAMPLES: usize = 512;
const RANGE: f64 = 128.0;

pub trait EmotionCombiner: Send + Sync {
    fn name(&self) -> String;
    fn combine(&self, emotion: f64, unexpectedness: f64) -> f64;
}

/// `E + U`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Additive;

impl EmotionCombiner for Additive {
    fn name(&self) -> String {
        "additive".into()
    }

    fn combine(&self, emotion: f64, unexpectedness: f64) -> f64 {
        emotion + unexpectedness
    }
}

/// `w·E + U` with `w > 0`.
#[derive(Debug, Clone, Copy)]
pub struct Weighted {
    pub emotion_weight: f64,
}

impl EmotionCombiner for Weighted {
    fn name(&self) -> String {
        format!("weighted:{}", self.emotion_weight)
    }

    fn combine(&self, emotion: f64, unexpectedness: f64) -> f64 {
        self.emotion_weight * emotion + unexpectedness
    }
}

/// Wraps a closure as a combiner.
pub struct FnCombiner<F> {
    pub name: String,
    pub f: F,
}

impl<F> EmotionCombiner for FnCombiner<F>
where
    F: Fn(f64, f64) -> f64 + Send + Sync,
{
    fn name(&self) -> String {
        self.name.clone()
    }

    fn combine(&self, emotion: f64, unexpectedness: f64) -> f64 {
        (self.f)(emotion, unexpectedness)
    }
}

/// Looks up a built-in combiner: `additive` or `weighted:<w>`.
pub fn combiner_by_name(name: &str) -> Result<Box<dyn EmotionCombiner>, RelevanceError> {
    match name.split_once(':') {
        None if name == "additive" => Ok(Box::new(Additive)),
        Some(("weighted", w)) => match w.parse::<f64>() {
            Ok(w) if w > 0.0 && w.is_finite() => Ok(Box::new(Weighted { emotion_weight: w })),
            _ => Err(RelevanceError::UnknownCombiner(name.to_string())),
        },
        _ => Err(RelevanceError::UnknownCombiner(name.to_string())),
    }
}

/// A combiner that passed the sampled monotonicity check.
pub struct CheckedCombiner(Box<dyn EmotionCombiner>);

impl CheckedCombiner {
    /// Samples random points and steps in each argument; any step that
    /// lowers the output rejects the combiner.
    pub fn new(combiner: Box<dyn EmotionCombiner>, seed: u64) -> Result<Self, RelevanceError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLES {
            let e = rng.gen_range(-RANGE..RANGE);
            let u = rng.gen_range(-RANGE..RANGE);
            let step = rng.gen_range(1e-3..16.0);
            let base = combiner.combine(e, u);
            for (de, du) in [(step, 0.0), (0.0, step)] {
                let moved = combiner.combine(e + de, u + du);
                if !(moved >= base) {
                    return Err(RelevanceError::NonMonotoneCombiner {
                        name: combiner.name(),
                        emotion: e,
                        unexpectedness: u,
                        argument: if de > 0.0 { "emotion" } else { "unexpectedness" },
                    });
                }
            }
        }
        Ok(CheckedCombiner(combiner))
    }

    pub fn name(&self) -> String {
        self.0.name()
    }
}

impl Default for CheckedCombiner {
    fn default() -> Self {
        CheckedCombiner(Box::new(Additive))
    }
}

impl fmt::Debug for CheckedCombiner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("CheckedCombiner").field(&self.0.name()).finish()
    }
}

/// Overall relevance `I = F(E, U)`; `F` defaults to [`Additive`].
pub fn emotional_relevance(e: EmotionLevel, u: f64, combiner: Option<&CheckedCombiner>) -> f64 {
    match combiner {
        Some(c) => c.0.combine(e.0, u),
        None => Additive.combine(e.0, u),
    }
}
