//! Canonical base-φ digit strings.
//!
//! A positive integer N has a unique expansion N = Σ d_i·φⁱ with digits
//! d_i ∈ {0, 1} and no two adjacent indices set. [`PhiDigits`] stores the
//! set indices; the textual grammar is `[01]+ ('.' [01]+)?` with the radix
//! point sitting between index 0 and index −1, e.g. "1010.0001" for 6.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::Error;
use crate::golden::GoldenInt;
use crate::zeckendorf::IndexSet;

/// A canonical base-φ digit string: the sorted set of indices carrying
/// digit 1, at least one of them, no two adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiDigits {
    ones: Vec<i64>,
}

/// A digit string split at the units place: the digits above index 0, the
/// units digit itself, and the fractional digits.
///
/// `beta_plus[0]` is the highest digit, descending to index 1; `beta_minus[0]`
/// is the digit at index −1, descending to the lowest index. The units digit
/// is kept separate because the reconstruction identities treat it as its own
/// term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSplit {
    pub beta_plus: Vec<bool>,
    pub d0: bool,
    pub beta_minus: Vec<bool>,
}

impl PhiDigits {
    /// Build from the indices carrying digit 1, in any order.
    pub fn from_ones(mut ones: Vec<i64>) -> Result<Self, Error> {
        if ones.is_empty() {
            return Err(Error::InvalidDigits("at least one digit must be set"));
        }
        ones.sort_unstable();
        for pair in ones.windows(2) {
            if pair[1] - pair[0] < 2 {
                return Err(Error::InvalidDigits("adjacent indices both set"));
            }
        }
        Ok(PhiDigits { ones })
    }

    /// Indices with digit 1, ascending.
    pub fn ones(&self) -> &[i64] {
        &self.ones
    }

    /// Highest stored index L (≥ 0).
    pub fn high(&self) -> i64 {
        (*self.ones.last().expect("nonempty")).max(0)
    }

    /// Lowest stored index R (≤ 0).
    pub fn low(&self) -> i64 {
        (*self.ones.first().expect("nonempty")).min(0)
    }

    pub fn digit(&self, index: i64) -> bool {
        self.ones.binary_search(&index).is_ok()
    }

    /// Greedy encoding of a positive integer: repeatedly subtract the largest
    /// power of φ not exceeding the remainder. After subtracting φᵏ the
    /// remainder is below φᵏ⁻¹, so the gap condition holds by construction,
    /// and uniqueness of the expansion makes any correct algorithm agree.
    pub fn encode(n: &BigInt) -> Result<Self, Error> {
        if !n.is_positive() {
            return Err(Error::NotPositive(n.clone()));
        }
        let target = GoldenInt::from_integer(n.clone());
        let mut k = largest_power_at_most(&target);
        let mut power = GoldenInt::phi_pow(k);
        let inv_phi = GoldenInt::new(-1, 1); // φ⁻¹ = φ − 1
        let mut remainder = target;
        let mut ones = Vec::new();
        // Integer expansions are finite with the low end no deeper than the
        // high end is tall; the budget turns a latent bug into a loud error.
        let budget = 4 * (2 * k.unsigned_abs() as usize + 16);
        let mut steps = 0;
        while !remainder.is_zero() {
            steps += 1;
            if steps > budget {
                return Err(Error::NonTerminating(budget));
            }
            if power <= remainder {
                remainder = &remainder - &power;
                ones.push(k);
            }
            k -= 1;
            power = &power * &inv_phi;
        }
        ones.reverse();
        Ok(PhiDigits { ones })
    }

    /// Exact value Σ φⁱ over the set digits, as an element of Z[φ].
    pub fn decode(&self) -> GoldenInt {
        self.ones
            .iter()
            .fold(GoldenInt::zero(), |acc, &i| &acc + &GoldenInt::phi_pow(i))
    }

    /// The integer the digit string denotes, failing when the value has a
    /// nonzero φ part or is below 1.
    pub fn decode_integer(&self) -> Result<BigInt, Error> {
        let value = self.decode().to_integer()?;
        if !value.is_positive() {
            return Err(Error::NotPositive(value));
        }
        Ok(value)
    }

    /// Parse the textual form. Syntax errors report a byte position;
    /// canonical-form violations report the offending digit index.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(Error::MalformedDigitString { position: 0, reason: "empty digit string" });
        }
        let mut point: Option<usize> = None;
        for (pos, &c) in bytes.iter().enumerate() {
            match c {
                b'0' | b'1' => {}
                b'.' => {
                    if point.is_some() {
                        return Err(Error::MalformedDigitString {
                            position: pos,
                            reason: "second radix point",
                        });
                    }
                    if pos == 0 {
                        return Err(Error::MalformedDigitString {
                            position: 0,
                            reason: "missing integer part",
                        });
                    }
                    if pos + 1 == bytes.len() {
                        return Err(Error::MalformedDigitString {
                            position: pos,
                            reason: "empty fractional part",
                        });
                    }
                    point = Some(pos);
                }
                _ => {
                    return Err(Error::MalformedDigitString {
                        position: pos,
                        reason: "expected '0', '1', or '.'",
                    })
                }
            }
        }
        let int_part = &bytes[..point.unwrap_or(bytes.len())];
        let frac_part = point.map_or(&bytes[..0], |p| &bytes[p + 1..]);

        let high = int_part.len() as i64 - 1;
        if high > 0 && int_part[0] == b'0' {
            return Err(Error::NonCanonical {
                index: high,
                reason: "leading zero: the highest digit must be 1",
            });
        }

        let mut ones = Vec::new();
        for (j, &c) in frac_part.iter().enumerate().rev() {
            if c == b'1' {
                ones.push(-(j as i64) - 1);
            }
        }
        for (j, &c) in int_part.iter().enumerate().rev() {
            if c == b'1' {
                ones.push(high - j as i64);
            }
        }
        // report the higher index of an adjacent pair, scanning downward
        for pair in ones.windows(2).rev() {
            if pair[1] - pair[0] < 2 {
                return Err(Error::NonCanonical {
                    index: pair[1],
                    reason: "adjacent digits both set",
                });
            }
        }
        if let Some(&last) = frac_part.last() {
            if last == b'0' {
                return Err(Error::NonCanonical {
                    index: -(frac_part.len() as i64),
                    reason: "trailing zero: the lowest fractional digit must be 1",
                });
            }
        }
        if ones.is_empty() {
            return Err(Error::NonCanonical {
                index: 0,
                reason: "no digit set: zero has no canonical digit string",
            });
        }
        Ok(PhiDigits { ones })
    }

    /// Split at the units place; lossless.
    pub fn split(&self) -> BetaSplit {
        BetaSplit {
            beta_plus: (1..=self.high()).rev().map(|i| self.digit(i)).collect(),
            d0: self.digit(0),
            beta_minus: (self.low()..=-1).rev().map(|i| self.digit(i)).collect(),
        }
    }

    /// Smallest index i > 0 with d_i = 1; absent only for N = 1.
    pub fn first_positive_index(&self) -> Option<i64> {
        self.ones.iter().copied().find(|&i| i > 0)
    }

    /// The set indices as a gap-validated exponent set.
    pub fn index_set(&self) -> IndexSet {
        IndexSet::from_sorted_unchecked(self.ones.clone())
    }
}

/// Largest k with φᵏ ≤ x, for x ≥ 1. Exponent doubling finds an upper bound,
/// then binary search refines it; every probe is an exact comparison.
fn largest_power_at_most(x: &GoldenInt) -> i64 {
    debug_assert!(*x >= GoldenInt::one());
    let mut hi = 1i64;
    while GoldenInt::phi_pow(hi) <= *x {
        hi *= 2;
    }
    let mut lo = 0i64;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if GoldenInt::phi_pow(mid) <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

impl BetaSplit {
    /// Reassemble the digit string the split came from.
    pub fn join(&self) -> Result<PhiDigits, Error> {
        let mut ones = Vec::new();
        let top = self.beta_plus.len() as i64;
        for (j, &set) in self.beta_plus.iter().enumerate() {
            if set {
                ones.push(top - j as i64);
            }
        }
        if self.d0 {
            ones.push(0);
        }
        for (j, &set) in self.beta_minus.iter().enumerate() {
            if set {
                ones.push(-(j as i64) - 1);
            }
        }
        PhiDigits::from_ones(ones)
    }
}

/// Canonical rendering; the radix point is omitted exactly when there are no
/// fractional digits. `parse` inverts this byte-for-byte.
impl fmt::Display for PhiDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..=self.high()).rev() {
            f.write_str(if self.digit(i) { "1" } else { "0" })?;
        }
        let low = self.low();
        if low < 0 {
            f.write_str(".")?;
            for i in (low..=-1).rev() {
                f.write_str(if self.digit(i) { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl FromStr for PhiDigits {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        PhiDigits::parse(s)
    }
}
