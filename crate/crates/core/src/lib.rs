//! Exact arithmetic for golden-ratio-base numeration.
//!
//! Every positive integer has a unique expansion as a sum of non-adjacent
//! integer powers of the golden ratio φ = (1+√5)/2, mirroring Zeckendorf's
//! theorem for Fibonacci numbers. This crate implements the whole pipeline
//! over exact arithmetic in the ring Z[φ] — no floating point anywhere:
//!
//! - [`golden`]: the ring Z[φ] itself, with exact sign determination,
//! - [`sequences`]: Fibonacci and Lucas numbers at any integer index,
//! - [`digits`]: the canonical base-φ digit-string codec,
//! - [`zeckendorf`]: Zeckendorf representations and the shift expansions
//!   N·F_n = Σ F_{n+i} they induce,
//! - [`reconstruct`]: recovering N from only part of its digit string via
//!   Lucas-number identities.

pub mod digits;
pub mod error;
pub mod golden;
pub mod reconstruct;
pub mod sequences;
pub mod zeckendorf;

pub use digits::{BetaSplit, PhiDigits};
pub use error::Error;
pub use golden::GoldenInt;
pub use reconstruct::ParityHint;
pub use zeckendorf::{IndexSet, ZeckendorfRep};
