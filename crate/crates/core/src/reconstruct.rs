//! Recovering N from parts of its base-φ digit string.
//!
//! The digits at positive indices determine N through a plain Lucas-number
//! sum; the fractional digits determine N through an alternating Lucas sum
//! once the units digit and the parity of the lowest positive set index are
//! known — that single parity bit is exactly the information the fractional
//! digits are missing. Summing the two reconstructions yields 2N straight
//! from the digit string. All of it rests on two exact sign facts about
//! gap-separated φ-power sums, implemented here as checkable predicates.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::digits::PhiDigits;
use crate::error::Error;
use crate::golden::GoldenInt;
use crate::sequences::lucas;
use crate::zeckendorf::IndexSet;

/// Parity of the smallest positive index carrying digit 1. `None` means no
/// positive digit exists, which happens only for N = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityHint {
    Odd,
    Even,
    None,
}

impl ParityHint {
    /// Classify an optional lowest positive index.
    pub fn of(first_positive_index: Option<i64>) -> Self {
        match first_positive_index {
            Some(i) if i % 2 != 0 => ParityHint::Odd,
            Some(_) => ParityHint::Even,
            None => ParityHint::None,
        }
    }

    /// The opposite hint. `None` behaves like `Even`, so it flips to `Odd`;
    /// a wrong hint always shifts the reconstruction by exactly one.
    pub fn flipped(self) -> Self {
        match self {
            ParityHint::Odd => ParityHint::Even,
            ParityHint::Even | ParityHint::None => ParityHint::Odd,
        }
    }
}

/// N from the digits at indices ≥ 1 plus the units digit:
/// Σ d_k·L_k + d₀, plus 1 exactly when the lowest set index is odd.
///
/// `beta_plus[0]` is the highest digit, descending to index 1, matching
/// [`BetaSplit`](crate::digits::BetaSplit). An all-zero slice falls back to
/// the no-correction branch and returns d₀, which covers N = 1.
pub fn from_positive(beta_plus: &[bool], d0: bool) -> Result<BigInt, Error> {
    check_adjacency(beta_plus, d0, beta_plus.last())?;
    let top = beta_plus.len() as i64;
    let mut total = if d0 { BigInt::one() } else { BigInt::zero() };
    let mut lowest_set = None;
    for (j, &set) in beta_plus.iter().enumerate() {
        if set {
            let k = top - j as i64;
            total += lucas(k);
            lowest_set = Some(k);
        }
    }
    if matches!(lowest_set, Some(k) if k % 2 != 0) {
        total += 1;
    }
    Ok(total)
}

/// N from the fractional digits, the units digit, and the parity hint:
/// Σ d₋ⱼ·(−1)ʲ·L_j + d₀, minus 1 exactly on the odd hint.
///
/// `beta_minus[0]` is the digit at index −1, descending to the lowest index.
/// `ParityHint::None` takes the no-correction branch.
pub fn from_negative(beta_minus: &[bool], d0: bool, hint: ParityHint) -> Result<BigInt, Error> {
    check_adjacency(beta_minus, d0, beta_minus.first())?;
    let mut total = if d0 { BigInt::one() } else { BigInt::zero() };
    for (slot, &set) in beta_minus.iter().enumerate() {
        if set {
            let j = slot as i64 + 1; // digit index is -j
            if j % 2 == 0 {
                total += lucas(j);
            } else {
                total -= lucas(j);
            }
        }
    }
    if hint == ParityHint::Odd {
        total -= 1;
    }
    Ok(total)
}

fn check_adjacency(digits: &[bool], d0: bool, next_to_d0: Option<&bool>) -> Result<(), Error> {
    for pair in digits.windows(2) {
        if pair[0] && pair[1] {
            return Err(Error::InvalidDigits("adjacent indices both set"));
        }
    }
    if d0 && next_to_d0.copied().unwrap_or(false) {
        return Err(Error::InvalidDigits("digit adjacent to the units digit also set"));
    }
    Ok(())
}

/// 2N directly from the whole digit string: the positive-side Lucas sum,
/// twice the units digit, and the alternating fractional Lucas sum. Always
/// even, being the sum of the two single-sided reconstructions.
pub fn double_from_lucas(d: &PhiDigits) -> BigInt {
    let mut total = BigInt::zero();
    for &i in d.ones() {
        if i > 0 {
            total += lucas(i);
        } else if i == 0 {
            total += 2;
        } else if i % 2 == 0 {
            total += lucas(-i);
        } else {
            total -= lucas(-i);
        }
    }
    total
}

/// Exact check that a gap-separated φ-power sum stays strictly below
/// φ^(max+1): Σ φ^k < φ^(k₁+1) where k₁ is the largest exponent. True for
/// every valid nonempty set.
pub fn lemma1_check(idx: &IndexSet) -> Result<bool, Error> {
    let top = idx.max().ok_or(Error::InvalidGaps("empty index set"))?;
    Ok(idx.phi_sum() < GoldenInt::phi_pow(top + 1))
}

/// Exact sign of the alternating sum Σ (−1)^k·φ^k over a gap-separated set.
/// The largest exponent dominates, so the sign is +1 exactly when that
/// exponent is even.
pub fn lemma2_sign(idx: &IndexSet) -> Result<i8, Error> {
    if idx.is_empty() {
        return Err(Error::InvalidGaps("empty index set"));
    }
    let mut total = GoldenInt::zero();
    for &k in idx.exponents() {
        let pow = GoldenInt::phi_pow(k);
        total = if k % 2 == 0 { &total + &pow } else { &total - &pow };
    }
    Ok(total.signum())
}

/// Every reconstruction evaluated for one N; mismatches are recorded, not
/// raised, so sweeps can collect all anomalies in one pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub n: BigInt,
    pub beta: String,
    pub from_positive: BigInt,
    pub from_negative: BigInt,
    pub doubled: BigInt,
    pub positive_ok: bool,
    pub negative_ok: bool,
    pub doubled_ok: bool,
    pub sum_matches_double: bool,
}

impl ConsistencyReport {
    pub fn all_ok(&self) -> bool {
        self.positive_ok && self.negative_ok && self.doubled_ok && self.sum_matches_double
    }
}

/// Encode N, split the digits, and run all three reconstructions.
pub fn theorem_consistency(n: &BigInt) -> Result<ConsistencyReport, Error> {
    let digits = PhiDigits::encode(n)?;
    let split = digits.split();
    let hint = ParityHint::of(digits.first_positive_index());
    let positive = from_positive(&split.beta_plus, split.d0)?;
    let negative = from_negative(&split.beta_minus, split.d0, hint)?;
    let doubled = double_from_lucas(&digits);
    Ok(ConsistencyReport {
        positive_ok: positive == *n,
        negative_ok: negative == *n,
        doubled_ok: doubled == n * 2,
        sum_matches_double: &positive + &negative == doubled,
        n: n.clone(),
        beta: digits.to_string(),
        from_positive: positive,
        from_negative: negative,
        doubled,
    })
}
