//! Exact arithmetic in Z[φ] = {a + b·φ : a, b ∈ Z}.
//!
//! φ = (1+√5)/2 satisfies φ² = φ + 1, so pairs of integer coefficients over
//! the basis {1, φ} are closed under the ring operations, and half-integers
//! never appear. Comparisons and signs are decided by integer arithmetic
//! alone; the only floating-point anywhere in this crate is a diagnostic
//! evaluator that the tests cross-check against the exact path.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::sequences;

/// An element a + b·φ of Z[φ] with arbitrary-precision coefficients.
///
/// The representation is unique: two values are equal iff both coefficient
/// pairs are equal. Values are immutable; all operations are pure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GoldenInt {
    unit: BigInt,
    phi: BigInt,
}

impl GoldenInt {
    pub fn new(unit: impl Into<BigInt>, phi: impl Into<BigInt>) -> Self {
        GoldenInt { unit: unit.into(), phi: phi.into() }
    }

    pub fn zero() -> Self {
        GoldenInt::new(0, 0)
    }

    pub fn one() -> Self {
        GoldenInt::new(1, 0)
    }

    /// The golden ratio itself, 0 + 1·φ.
    pub fn phi() -> Self {
        GoldenInt::new(0, 1)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        GoldenInt::new(n, 0)
    }

    /// The a in a + b·φ.
    pub fn unit_coeff(&self) -> &BigInt {
        &self.unit
    }

    /// The b in a + b·φ.
    pub fn phi_coeff(&self) -> &BigInt {
        &self.phi
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.phi.is_zero()
    }

    /// Algebraic conjugate: sends φ to φ̄ = 1 − φ = −φ⁻¹ and fixes integers.
    ///
    /// conj(a + b·φ) = (a + b) − b·φ. An involution and a ring homomorphism.
    pub fn conj(&self) -> Self {
        GoldenInt { unit: &self.unit + &self.phi, phi: -&self.phi }
    }

    /// Exact value of φⁿ for any integer n, via φⁿ = F(n)·φ + F(n−1) with
    /// Fibonacci numbers extended to negative indices.
    pub fn phi_pow(n: i64) -> Self {
        GoldenInt { unit: sequences::fib(n - 1), phi: sequences::fib(n) }
    }

    /// Sign of the real number a + b·φ, decided exactly.
    ///
    /// Writing the value as ((2a+b) + b·√5)/2, the sign is immediate when the
    /// two components agree; when they disagree, comparing (2a+b)² against
    /// 5b² tells which term dominates. √5 is irrational, so the squares can
    /// tie only at zero.
    pub fn signum(&self) -> i8 {
        let x: BigInt = &self.unit * 2 + &self.phi;
        let y = &self.phi;
        match (x.sign(), y.sign()) {
            (Sign::NoSign, Sign::NoSign) => 0,
            (Sign::Plus | Sign::NoSign, Sign::Plus | Sign::NoSign) => 1,
            (Sign::Minus | Sign::NoSign, Sign::Minus | Sign::NoSign) => -1,
            (Sign::Plus, Sign::Minus) => match (&x * &x).cmp(&(y * y * 5)) {
                Ordering::Greater => 1,
                Ordering::Less => -1,
                Ordering::Equal => 0,
            },
            (Sign::Minus, Sign::Plus) => match (&x * &x).cmp(&(y * y * 5)) {
                Ordering::Greater => -1,
                Ordering::Less => 1,
                Ordering::Equal => 0,
            },
        }
    }

    /// The exact integer value, available iff the φ coefficient vanishes.
    pub fn to_integer(&self) -> Result<BigInt, Error> {
        if self.phi.is_zero() {
            Ok(self.unit.clone())
        } else {
            Err(Error::NotAnInteger(self.clone()))
        }
    }

    /// Numerators (x, y) of the equivalent form (x + y·√5)/2, i.e.
    /// x = 2a + b and y = b. Provided for working against sources that use
    /// the {1, √5} basis.
    pub fn sqrt5_numerators(&self) -> (BigInt, BigInt) {
        (&self.unit * 2 + &self.phi, self.phi.clone())
    }

    /// Inverse of [`sqrt5_numerators`](Self::sqrt5_numerators): the value
    /// (x + y·√5)/2 lies in Z[φ] iff x ≡ y (mod 2).
    pub fn from_sqrt5_numerators(x: &BigInt, y: &BigInt) -> Option<Self> {
        let diff = x - y;
        if (&diff % 2i32).is_zero() {
            Some(GoldenInt { unit: diff / 2, phi: y.clone() })
        } else {
            None
        }
    }
}

impl Add for &GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: Self) -> GoldenInt {
        GoldenInt { unit: &self.unit + &rhs.unit, phi: &self.phi + &rhs.phi }
    }
}

impl Sub for &GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: Self) -> GoldenInt {
        GoldenInt { unit: &self.unit - &rhs.unit, phi: &self.phi - &rhs.phi }
    }
}

impl Mul for &GoldenInt {
    type Output = GoldenInt;
    // (a + bφ)(c + dφ) = ac + (ad + bc)φ + bd·φ², and φ² = φ + 1.
    fn mul(self, rhs: Self) -> GoldenInt {
        let bd = &self.phi * &rhs.phi;
        GoldenInt {
            unit: &self.unit * &rhs.unit + &bd,
            phi: &self.unit * &rhs.phi + &self.phi * &rhs.unit + bd,
        }
    }
}

impl Neg for &GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt { unit: -&self.unit, phi: -&self.phi }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident::$method:ident),*) => {$(
        impl $trait for GoldenInt {
            type Output = GoldenInt;
            fn $method(self, rhs: Self) -> GoldenInt {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        -&self
    }
}

impl PartialOrd for GoldenInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order consistent with the real embedding, via the exact sign of the
/// difference.
impl Ord for GoldenInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

/// Canonical rendering "a+b*phi" with the sign folded into the separator and
/// no spaces, e.g. "-1+2*phi" or "3-5*phi".
impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phi.is_negative() {
            write!(f, "{}-{}*phi", self.unit, self.phi.magnitude())
        } else {
            write!(f, "{}+{}*phi", self.unit, self.phi)
        }
    }
}
