use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde_json::Value;

use super::{Polynomial, Rational, Semiring, SemiringKind};
use crate::error::{Error, Result};

/// Quotient of two polynomials in the formal parameter `d`.
///
/// Stored reduced: the denominator is monic and coprime to the numerator, and
/// zero is `0/1`. With this normal form structural equality is equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction { num, den: Polynomial::one() });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_rem(&g).0, den.div_rem(&g).0);
        let lead = den.leading().expect("nonzero").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: &Rational) -> Self {
        RationalFunction::from_polynomial(Polynomial::constant(c.0.clone()))
    }

    pub fn from_int(n: i64) -> Self {
        RationalFunction::constant(&Rational::from_int(n))
    }

    /// The parameter `d` itself.
    pub fn d() -> Self {
        RationalFunction::from_polynomial(Polynomial::var())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn inv(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Substitute a rational for `d`; `None` at a pole.
    pub fn eval_at(&self, x: &Rational) -> Option<Rational> {
        let den = self.den.eval(&x.0);
        if den.is_zero() {
            None
        } else {
            Some(Rational(self.num.eval(&x.0) / den))
        }
    }

    fn combine(num: Polynomial, den: Polynomial) -> Self {
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

fn poly_to_json(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Rational(c.clone()).to_json()).collect())
}

fn poly_from_json(v: &Value) -> Result<Polynomial> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a coefficient list, got {v}")))?;
    let coeffs = arr
        .iter()
        .map(|c| Rational::from_json(c).map(|r| r.0))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

impl Semiring for RationalFunction {
    const KIND: SemiringKind = SemiringKind::RationalFunction;

    fn zero() -> Self {
        RationalFunction::from_polynomial(Polynomial::zero())
    }
    fn one() -> Self {
        RationalFunction::from_polynomial(Polynomial::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RationalFunction::combine(self.num.add(&rhs.num), self.den.clone());
        }
        RationalFunction::combine(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        RationalFunction::combine(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_u64(n: u64) -> Self {
        RationalFunction::from_polynomial(Polynomial::constant(BigRational::from_integer(
            BigInt::from(n),
        )))
    }
    fn to_json(&self) -> Value {
        serde_json::json!({ "num": poly_to_json(&self.num), "den": poly_to_json(&self.den) })
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Object(o) => {
                let num = poly_from_json(o.get("num").ok_or_else(|| Error::Parse("missing num".into()))?)?;
                let den = match o.get("den") {
                    Some(d) => poly_from_json(d)?,
                    None => Polynomial::one(),
                };
                RationalFunction::new(num, den).map_err(|_| Error::Parse("zero denominator".into()))
            }
            other => Rational::from_json(other).map(|r| RationalFunction::constant(&r)),
        }
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut poly = || {
            let deg = rng.gen_range(0..=1usize);
            Polynomial::new(
                (0..=deg)
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-2..=2i64))))
                    .collect(),
            )
        };
        let num = poly();
        let mut den = poly();
        if den.is_zero() {
            den = Polynomial::one();
        }
        RationalFunction::combine(num, den)
    }
}
