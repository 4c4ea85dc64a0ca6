//! Zeckendorf representations and shift expansions.
//!
//! Zeckendorf's theorem: every positive integer is a unique sum of
//! non-consecutive Fibonacci numbers F_k with k ≥ 2. The base-φ expansion
//! of N carries the same information in a different guise: its exponent set
//! {i} satisfies N·F_n = Σ F_{n+i} and N·L_n = Σ L_{n+i} for every integer
//! n, and Σ φⁱ = N exactly — three equivalent readings of one index set.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::digits::PhiDigits;
use crate::error::Error;
use crate::golden::GoldenInt;
use crate::sequences::{fib, lucas};

/// Fibonacci indices (each ≥ 2, pairwise gaps ≥ 2) summing to a positive
/// integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeckendorfRep {
    indices: Vec<i64>,
}

impl ZeckendorfRep {
    pub fn new(mut indices: Vec<i64>) -> Result<Self, Error> {
        if indices.is_empty() {
            return Err(Error::InvalidGaps("empty index list"));
        }
        indices.sort_unstable();
        if indices[0] < 2 {
            return Err(Error::InvalidGaps("Zeckendorf indices start at 2"));
        }
        check_gaps(&indices)?;
        Ok(ZeckendorfRep { indices })
    }

    /// Greedy decomposition: subtract the largest Fibonacci number that fits.
    pub fn encode(n: &BigInt) -> Result<Self, Error> {
        if !n.is_positive() {
            return Err(Error::NotPositive(n.clone()));
        }
        // F(2), F(3), ... up to the first value exceeding n
        let mut fibs = vec![fib(2), fib(3)];
        while fibs.last().unwrap() <= n {
            let next = &fibs[fibs.len() - 1] + &fibs[fibs.len() - 2];
            fibs.push(next);
        }
        let mut remainder = n.clone();
        let mut indices = Vec::new();
        for (j, f) in fibs.iter().enumerate().rev() {
            if *f <= remainder {
                remainder -= f;
                indices.push(j as i64 + 2);
            }
        }
        debug_assert!(remainder.is_zero());
        indices.reverse();
        Ok(ZeckendorfRep { indices })
    }

    /// Σ F_k over the stored indices.
    pub fn decode(&self) -> BigInt {
        self.indices.iter().map(|&k| fib(k)).sum()
    }

    /// Indices ascending.
    pub fn indices(&self) -> &[i64] {
        &self.indices
    }
}

/// Sorted integer exponents of any sign with pairwise gaps ≥ 2 — the offset
/// set of a shift expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    exponents: Vec<i64>,
}

impl IndexSet {
    pub fn new(mut exponents: Vec<i64>) -> Result<Self, Error> {
        exponents.sort_unstable();
        check_gaps(&exponents)?;
        Ok(IndexSet { exponents })
    }

    pub(crate) fn from_sorted_unchecked(exponents: Vec<i64>) -> Self {
        IndexSet { exponents }
    }

    /// Exponents ascending.
    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn max(&self) -> Option<i64> {
        self.exponents.last().copied()
    }

    /// Exact value Σ φⁱ over the exponents.
    pub fn phi_sum(&self) -> GoldenInt {
        self.exponents
            .iter()
            .fold(GoldenInt::zero(), |acc, &i| &acc + &GoldenInt::phi_pow(i))
    }

    /// A random valid set: size uniform in 1..=max_size (capped so it fits),
    /// exponents within [lo, hi]. Gap-separated tuples are drawn uniformly by
    /// sampling a plain combination and re-spreading it.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R, max_size: usize, lo: i64, hi: i64) -> Self {
        assert!(lo <= hi);
        let span = (hi - lo + 1) as usize;
        let max_fit = span.div_ceil(2).min(max_size);
        let size = rng.random_range(1..=max_fit);
        let slots = span - 2 * (size - 1);
        let mut picks = rand::seq::index::sample(rng, slots, size).into_vec();
        picks.sort_unstable();
        let exponents = picks
            .iter()
            .enumerate()
            .map(|(j, &p)| lo + p as i64 + 2 * j as i64)
            .collect();
        IndexSet { exponents }
    }
}

fn check_gaps(sorted: &[i64]) -> Result<(), Error> {
    for pair in sorted.windows(2) {
        if pair[1] - pair[0] < 2 {
            return Err(Error::InvalidGaps("consecutive entries differ by less than 2"));
        }
    }
    Ok(())
}

/// The exponent set of the base-φ expansion of N: the unique offsets i with
/// N·F_n = Σ F_{n+i} for every integer n.
pub fn shift_expansion(n: &BigInt) -> Result<IndexSet, Error> {
    Ok(PhiDigits::encode(n)?.index_set())
}

/// Σ F_{shift+i} over the set.
pub fn shifted_fib_sum(idx: &IndexSet, shift: i64) -> BigInt {
    idx.exponents().iter().map(|&i| fib(shift + i)).sum()
}

/// Σ L_{shift+i} over the set.
pub fn shifted_lucas_sum(idx: &IndexSet, shift: i64) -> BigInt {
    idx.exponents().iter().map(|&i| lucas(shift + i)).sum()
}

/// Both sides of N·F_n = Σ F_{n+i} at one shift n; the two values are
/// returned rather than a boolean so failures carry their witnesses.
pub fn nf_identity(n: &BigInt, shift: i64) -> Result<(BigInt, BigInt), Error> {
    let idx = shift_expansion(n)?;
    Ok((n * fib(shift), shifted_fib_sum(&idx, shift)))
}

/// Both sides of N·L_n = Σ L_{n+i} at one shift n.
pub fn nl_identity(n: &BigInt, shift: i64) -> Result<(BigInt, BigInt), Error> {
    let idx = shift_expansion(n)?;
    Ok((n * lucas(shift), shifted_lucas_sum(&idx, shift)))
}

/// True iff Σ φⁱ over the set equals n exactly.
pub fn phi_sum_check(idx: &IndexSet, n: &BigInt) -> bool {
    idx.phi_sum() == GoldenInt::from_integer(n.clone())
}
