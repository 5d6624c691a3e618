//! A relevance engine built on the contrast between two complexities.
//!
//! * **Description complexity** `C(s)`: how many bits the observer needs to
//!   single out a situation, using its own memory (ranked lists, context).
//! * **Generation complexity** `C_w(s)`: how many bits the world needs to
//!   produce it, according to the observer's causal beliefs (lotteries,
//!   scenarios, implications).
//!
//! A situation is relevant when it is simpler to describe than to generate:
//! its *unexpectedness* `U = C_w − C` is positive.
//!
//! Modules, bottom-up:
//!
//! * [`codec`]: the compact positional code turning ranks into bits.
//! * [`knowledge`]: ranked lists, time/place anchors, the belief base, persistence.
//! * [`generation`]: the machine expression language, scenarios, bound propagation, mutability.
//! * [`relevance`]: unexpectedness, feature relevance, coincidences,
//!   second-order relevance, record relevance, emotion.
//! * [`cli`]: the command-line front end behind the `simplicity` binary.

pub mod bits;
pub mod cli;
pub mod codec;
pub mod generation;
pub mod knowledge;
pub mod relevance;

pub use bits::Bits;
