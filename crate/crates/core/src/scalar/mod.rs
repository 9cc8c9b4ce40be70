//! Exact scalars: rationals and multivariate Laurent polynomials over `Q`.
//!
//! A [`Scalar`] is always in normal form. Constant polynomials collapse to
//! [`Scalar::Rational`], so "identically zero" is decided by
//! [`Scalar::is_zero`] and structural equality is mathematical equality.

mod laurent;
mod parse;
mod ring;

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use laurent::{Exponents, LaurentPoly};
pub use parse::{parse_scalar, ParseError};
pub use ring::Ring;

pub(crate) use laurent::render_rational;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("`{0}` is not a unit of the Laurent ring (only monomials are invertible); instantiate the parameters first")]
    NotUnit(String),
    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),
    #[error("variable `{0}` occurs with a negative exponent and cannot be set to zero")]
    ZeroDenominator(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Element of the ground field `Q` or of a Laurent ring over it.
///
/// Invariant: the `Laurent` variant never holds a constant polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Laurent(LaurentPoly),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`; panics when `denom == 0`.
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Scalar::Rational(Rational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn variable(ring: &Ring, name: &str) -> Option<Self> {
        ring.index_of(name)
            .map(|i| Scalar::from_poly(LaurentPoly::variable(ring.clone(), i)))
    }

    /// Normalizes a polynomial, collapsing constants to rationals.
    pub fn from_poly(p: LaurentPoly) -> Self {
        match p.as_constant() {
            Some(c) => Scalar::Rational(c),
            None => Scalar::Laurent(p),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    /// The ring this scalar lives in; `None` for rationals, which embed in
    /// every ring.
    pub fn ring(&self) -> Option<&Ring> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Laurent(p) => Some(p.ring()),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Laurent(_) => None,
        }
    }

    fn to_poly(&self, ring: &Ring) -> LaurentPoly {
        match self {
            Scalar::Rational(r) => LaurentPoly::constant(ring.clone(), r.clone()),
            Scalar::Laurent(p) => p.clone(),
        }
    }

    fn common_ring(&self, other: &Scalar) -> Result<Ring, ScalarError> {
        match (self.ring(), other.ring()) {
            (Some(a), Some(b)) => a.unify(b),
            (Some(a), None) | (None, Some(a)) => Ok(a.clone()),
            (None, None) => Ok(Ring::rationals()),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, other) {
            return Ok(Scalar::Rational(a + b));
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let ring = self.common_ring(other)?;
        Ok(Scalar::from_poly(self.to_poly(&ring).add(&other.to_poly(&ring))?))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Rational(a), Scalar::Laurent(p)) | (Scalar::Laurent(p), Scalar::Rational(a)) => {
                Ok(Scalar::from_poly(p.scale(a)))
            }
            (Scalar::Laurent(p), Scalar::Laurent(q)) => Ok(Scalar::from_poly(p.mul(q)?)),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Rational(r) => !r.is_zero(),
            Scalar::Laurent(p) => p.is_unit(),
        }
    }

    /// Multiplicative inverse. Only nonzero rationals and monomials are
    /// invertible; anything else is an error rather than an approximation.
    pub fn invert(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(r) if r.is_zero() => Err(ScalarError::DivisionByZero),
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Laurent(p) => p.invert().map(Scalar::Laurent),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_mul(&other.invert()?)
    }

    /// Partial substitution of parameters by rationals.
    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(_) => Ok(self.clone()),
            Scalar::Laurent(p) => p.substitute(assignment).map(Scalar::from_poly),
        }
    }

    /// Full evaluation; every variable that occurs must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, ScalarError> {
        if let Scalar::Laurent(p) = self {
            for var in p.ring().vars() {
                if !assignment.contains_key(var) {
                    return Err(ScalarError::MissingVariable(var.clone()));
                }
            }
        }
        match self.substitute(assignment)? {
            Scalar::Rational(r) => Ok(r),
            Scalar::Laurent(_) => unreachable!("all variables were substituted"),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rational(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", render_rational(r)),
            Scalar::Laurent(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

// Operator sugar for the engine. Objects are ring-checked when they are
// built, so a mismatch here is a programming error.

fn expect<T>(r: Result<T, ScalarError>) -> T {
    r.unwrap_or_else(|e| panic!("scalar arithmetic: {e}"))
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Laurent(p) => Scalar::Laurent(p.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                expect(self.$checked(rhs))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                expect(self.$checked(&rhs))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                expect(self.$checked(rhs))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                expect(self.$checked(&rhs))
            }
        }
        impl $assign_trait<&Scalar> for Scalar {
            fn $assign(&mut self, rhs: &Scalar) {
                *self = expect(self.$checked(rhs));
            }
        }
        impl $assign_trait<Scalar> for Scalar {
            fn $assign(&mut self, rhs: Scalar) {
                *self = expect(self.$checked(&rhs));
            }
        }
    };
}

binop!(Add, add, try_add, AddAssign, add_assign);
binop!(Sub, sub, try_sub, SubAssign, sub_assign);
binop!(Mul, mul, try_mul, MulAssign, mul_assign);

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}
