use thiserror::Error;

use crate::word::LetterKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("strand count must be at least 1")]
    EmptyStrandCount,

    #[error("{kind} index {index} out of range for {n} strands")]
    IndexOutOfRange {
        kind: LetterKind,
        index: usize,
        n: usize,
    },

    #[error("zero exponent")]
    ZeroExponent,

    #[error("framing letter t{index} not allowed here")]
    FramingLetter { index: usize },

    #[error("vector length {got} does not match {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid move descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("closure is not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("plat closure needs an even strand count, got {0}")]
    OddStrandCount(usize),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
