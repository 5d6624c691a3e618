//! Positional code for ranked lists.
//!
//! Code words are enumerated by length, then by binary value:
//! `ε, 0, 1, 00, 01, 10, 11, 000, …`. Rank `r` receives the word at
//! position `r`, whose length is `floor(log2(r + 1))`. The code is not
//! self-delimiting; segmentation is assumed to happen upstream, so the
//! complexity of an item is exactly the length of its word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;

/// 0-based position in a ranked list. Rank 0 is the most salient item.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rank(pub u64);

/// An explicit bit sequence; the empty word is a valid code word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CodeWord {
    bits: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodecError {
    #[error("invalid code word character {0:?}: expected '0' or '1'")]
    InvalidSymbol(char),
    #[error("code word of length {0} does not denote a rank representable in 64 bits")]
    RankOverflow(usize),
}

impl CodeWord {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        CodeWord { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

impl fmt::Display for CodeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.bits {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for CodeWord {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(CodecError::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(CodeWord::from_bits)
    }
}

/// Level of a rank: `floor(log2(r + 1))`.
fn level(r: Rank) -> u32 {
    let shifted = u128::from(r.0) + 1;
    127 - shifted.leading_zeros()
}

pub fn encode_rank(r: Rank) -> CodeWord {
    let len = level(r);
    // offset within the level: r + 1 - 2^len, written on len bits
    let offset = u128::from(r.0) + 1 - (1u128 << len);
    let bits = (0..len).rev().map(|i| (offset >> i) & 1 == 1).collect();
    CodeWord { bits }
}

/// Inverse of [`encode_rank`]: `2^len − 1 + value(w)`.
///
/// Only fails for words longer than any 64-bit rank's code.
pub fn decode(w: &CodeWord) -> Result<Rank, CodecError> {
    let len = w.len();
    if len > 64 {
        return Err(CodecError::RankOverflow(len));
    }
    let value = w.bits.iter().fold(0u128, |acc, &bit| (acc << 1) | u128::from(bit));
    let rank = (1u128 << len) - 1 + value;
    u64::try_from(rank).map(Rank).map_err(|_| CodecError::RankOverflow(len))
}

/// Description complexity of the item at rank `r`.
pub fn code_length(r: Rank) -> Bits {
    Bits::from(level(r))
}
