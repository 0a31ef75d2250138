use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use serde_json::Value;

use super::{Semiring, SemiringKind};
use crate::error::{Error, Result};

/// Absolute tolerance used by `==` on [`ComplexF64`].
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Double-precision complex numbers. `==` means `|a - b| <= 1e-12`; use
/// [`Semiring::eq_within`] for another tolerance. Not part of the exact suites.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexF64(pub Complex64);

impl ComplexF64 {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexF64(Complex64::new(re, im))
    }

    pub fn i() -> Self {
        ComplexF64::new(0.0, 1.0)
    }

    pub fn conj(&self) -> Self {
        ComplexF64(self.0.conj())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        ComplexF64(self.0 - rhs.0)
    }

    pub fn abs(&self) -> f64 {
        self.0.norm()
    }
}

impl PartialEq for ComplexF64 {
    fn eq(&self, other: &Self) -> bool {
        (self.0 - other.0).norm() <= DEFAULT_TOLERANCE
    }
}

impl fmt::Display for ComplexF64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Semiring for ComplexF64 {
    const KIND: SemiringKind = SemiringKind::Complex;

    fn zero() -> Self {
        ComplexF64::new(0.0, 0.0)
    }
    fn one() -> Self {
        ComplexF64::new(1.0, 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        ComplexF64(self.0 + rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        ComplexF64(self.0 * rhs.0)
    }
    // Exact zero test: used to skip work, never to decide equality.
    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }
    fn eq_within(&self, rhs: &Self, tol: f64) -> bool {
        (self.0 - rhs.0).norm() <= tol
    }
    fn to_json(&self) -> Value {
        serde_json::json!([self.0.re, self.0.im])
    }
    fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("expected [re, im], got {v}"));
        match v {
            Value::Array(a) if a.len() == 2 => {
                let re = a[0].as_f64().ok_or_else(bad)?;
                let im = a[1].as_f64().ok_or_else(bad)?;
                Ok(ComplexF64::new(re, im))
            }
            Value::Number(n) => Ok(ComplexF64::new(n.as_f64().ok_or_else(bad)?, 0.0)),
            _ => Err(bad()),
        }
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        ComplexF64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_equality() {
        let a = ComplexF64::new(1.0, 0.0);
        let b = ComplexF64::new(1.0 + 1e-13, 0.0);
        assert_eq!(a, b);
        assert!(!a.eq_within(&b, 1e-14));
        assert_ne!(a, ComplexF64::new(1.0, 1e-9));
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(ComplexF64::i().mul(&ComplexF64::i()), ComplexF64::new(-1.0, 0.0));
    }
}
