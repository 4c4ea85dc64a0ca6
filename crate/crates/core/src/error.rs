//! Error type shared by the codec, ring, and reconstruction operations.

use num_bigint::BigInt;
use thiserror::Error;

use crate::golden::GoldenInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The value has a nonzero φ coefficient, so it is not a rational integer.
    #[error("not an integer: {0} has a nonzero phi coefficient")]
    NotAnInteger(GoldenInt),

    /// An operation defined only for positive integers received something else.
    #[error("expected a positive integer, got {0}")]
    NotPositive(BigInt),

    /// The greedy expansion exceeded its iteration budget. Integer expansions
    /// are finite, so this signals an arithmetic bug, never expected input.
    #[error("digit expansion did not terminate within {0} iterations")]
    NonTerminating(usize),

    /// The input is not a syntactically valid digit string.
    #[error("malformed digit string at position {position}: {reason}")]
    MalformedDigitString { position: usize, reason: &'static str },

    /// Valid syntax, but the digits violate a canonical-form invariant.
    /// `index` is the digit index (power of φ) where the violation sits.
    #[error("non-canonical digit string at index {index}: {reason}")]
    NonCanonical { index: i64, reason: &'static str },

    /// A raw digit list breaks the no-adjacent-ones condition.
    #[error("invalid digit pattern: {0}")]
    InvalidDigits(&'static str),

    /// An exponent list is empty or breaks the minimum-gap-of-two condition.
    #[error("invalid index set: {0}")]
    InvalidGaps(&'static str),
}
