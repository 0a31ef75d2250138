//! Commutative semirings and the concrete instances the rest of the crate is
//! generic over.
//!
//! Equality is the semiring's own `PartialEq`: exact for every instance except
//! [`ComplexF64`], which compares within an absolute tolerance.

mod boolean;
mod complex;
mod natural;
mod poly;
mod rational;
mod ratfunc;

pub use boolean::Boolean;
pub use complex::{ComplexF64, DEFAULT_TOLERANCE};
pub use natural::Natural;
pub use poly::Polynomial;
pub use rational::Rational;
pub use ratfunc::RationalFunction;

use std::fmt;

use rand::Rng;
use serde_json::Value;

use crate::error::Result;

/// Runtime tag for the instances, used by the file formats and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemiringKind {
    Boolean,
    Natural,
    Rational,
    Complex,
    RationalFunction,
}

impl SemiringKind {
    pub fn name(self) -> &'static str {
        match self {
            SemiringKind::Boolean => "boolean",
            SemiringKind::Natural => "natural",
            SemiringKind::Rational => "rational",
            SemiringKind::Complex => "complex",
            SemiringKind::RationalFunction => "ratfunc",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "boolean" | "bool" => SemiringKind::Boolean,
            "natural" | "nat" => SemiringKind::Natural,
            "rational" | "rat" => SemiringKind::Rational,
            "complex" | "complexf64" => SemiringKind::Complex,
            "ratfunc" | "rational_function" | "rationalfunction" => SemiringKind::RationalFunction,
            _ => return None,
        })
    }

    /// Exact instances take part in the bit-exact law suites.
    pub fn is_exact(self) -> bool {
        self != SemiringKind::Complex
    }
}

impl fmt::Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A commutative semiring `(S, +, ·, 0, 1)`.
pub trait Semiring: Clone + fmt::Debug + fmt::Display + PartialEq + 'static {
    const KIND: SemiringKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Equality within `tol`; exact instances ignore the tolerance.
    fn eq_within(&self, rhs: &Self, _tol: f64) -> bool {
        self == rhs
    }

    /// The image of `n` under the unique map from the naturals.
    fn from_u64(mut n: u64) -> Self {
        let mut acc = Self::zero();
        let mut base = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.add(&base);
            }
            base = base.add(&base);
            n >>= 1;
        }
        acc
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;

    /// A small random element, for seeded property suites.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

/// Sum of an iterator of semiring elements.
pub fn sum<'a, S: Semiring, I: IntoIterator<Item = &'a S>>(items: I) -> S {
    items.into_iter().fold(S::zero(), |acc, x| acc.add(x))
}

/// Product of an iterator of semiring elements.
pub fn product<'a, S: Semiring, I: IntoIterator<Item = &'a S>>(items: I) -> S {
    items.into_iter().fold(S::one(), |acc, x| acc.mul(x))
}
