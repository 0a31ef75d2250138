use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;
use serde_json::Value;

use super::{Semiring, SemiringKind};
use crate::error::{Error, Result};

/// Unbounded non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Natural(pub BigUint);

impl From<u64> for Natural {
    fn from(n: u64) -> Self {
        Natural(BigUint::from(n))
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Semiring for Natural {
    const KIND: SemiringKind = SemiringKind::Natural;

    fn zero() -> Self {
        Natural(BigUint::zero())
    }
    fn one() -> Self {
        Natural(BigUint::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        Natural(&self.0 + &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Natural(&self.0 * &rhs.0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn from_u64(n: u64) -> Self {
        Natural::from(n)
    }
    fn to_json(&self) -> Value {
        Value::String(self.0.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s
                .trim()
                .parse::<BigUint>()
                .map(Natural)
                .map_err(|_| Error::Parse(format!("bad natural `{s}`"))),
            Value::Number(n) => n
                .as_u64()
                .map(Natural::from)
                .ok_or_else(|| Error::Parse(format!("bad natural {n}"))),
            _ => Err(Error::Parse(format!("expected a natural, got {v}"))),
        }
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Natural::from(rng.gen_range(0..6u64))
    }
}
