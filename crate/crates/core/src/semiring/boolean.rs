use std::fmt;

use rand::Rng;
use serde_json::Value;

use super::{Semiring, SemiringKind};
use crate::error::{Error, Result};

/// The boolean semiring `({0,1}, or, and)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Boolean(pub bool);

impl From<bool> for Boolean {
    fn from(b: bool) -> Self {
        Boolean(b)
    }
}

impl fmt::Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Semiring for Boolean {
    const KIND: SemiringKind = SemiringKind::Boolean;

    fn zero() -> Self {
        Boolean(false)
    }
    fn one() -> Self {
        Boolean(true)
    }
    fn add(&self, rhs: &Self) -> Self {
        Boolean(self.0 || rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Boolean(self.0 && rhs.0)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn from_u64(n: u64) -> Self {
        Boolean(n > 0)
    }
    fn to_json(&self) -> Value {
        Value::Bool(self.0)
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Bool(b) => Ok(Boolean(*b)),
            Value::Number(n) if n.as_u64() == Some(0) => Ok(Boolean(false)),
            Value::Number(n) if n.as_u64() == Some(1) => Ok(Boolean(true)),
            _ => Err(Error::Parse(format!("expected a boolean, got {v}"))),
        }
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Boolean(rng.gen_bool(0.5))
    }
}
