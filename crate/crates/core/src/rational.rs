//! Exact rationals with zero-totalized inverse and division.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An element of the zero-totalized field of rational numbers.
///
/// Always in lowest terms with a positive denominator. [`Q0Value::inv`] and
/// the `/` operator are total: `0⁻¹ = 0` and `x / 0 = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Q0Value(BigRational);

impl Q0Value {
    pub fn zero() -> Q0Value {
        Q0Value(BigRational::zero())
    }

    pub fn one() -> Q0Value {
        Q0Value(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Q0Value {
        Q0Value(BigRational::from_integer(n.into()))
    }

    /// `numer / denom`, reduced. A zero denominator yields zero, as division
    /// does.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Q0Value {
        let d = denom.into();
        if d.is_zero() {
            Q0Value::zero()
        } else {
            Q0Value(BigRational::new(numer.into(), d))
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn inv(&self) -> Q0Value {
        if self.0.is_zero() {
            Q0Value::zero()
        } else {
            Q0Value(self.0.recip())
        }
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Q0Value {
    fn from(r: BigRational) -> Self {
        Q0Value(r)
    }
}

impl From<i64> for Q0Value {
    fn from(n: i64) -> Self {
        Q0Value::from_integer(n)
    }
}

impl fmt::Display for Q0Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Q0Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q0Value({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational `{0}`: expected `n`, `-n`, `n/m` or `-n/m` with m > 0")]
pub struct ParseRationalError(pub String);

impl FromStr for Q0Value {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let numer: BigInt = n.parse().map_err(|_| err())?;
        if d.starts_with(['-', '+']) {
            return Err(err());
        }
        let denom: BigInt = d.parse().map_err(|_| err())?;
        if denom.is_zero() {
            return Err(err());
        }
        Ok(Q0Value(BigRational::new(numer, denom)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $tr<&Q0Value> for &Q0Value {
            type Output = Q0Value;
            fn $method(self, rhs: &Q0Value) -> Q0Value {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $tr for Q0Value {
            type Output = Q0Value;
            fn $method(self, rhs: Q0Value) -> Q0Value {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Q0Value(&a.0 + &b.0));
forward_binop!(Sub, sub, |a, b| Q0Value(&a.0 - &b.0));
forward_binop!(Mul, mul, |a, b| Q0Value(&a.0 * &b.0));
// Total: x / 0 = 0.
forward_binop!(Div, div, |a, b| if b.is_zero() {
    Q0Value::zero()
} else {
    Q0Value(&a.0 / &b.0)
});

impl Neg for Q0Value {
    type Output = Q0Value;
    fn neg(self) -> Q0Value {
        Q0Value(-self.0)
    }
}

impl Neg for &Q0Value {
    type Output = Q0Value;
    fn neg(self) -> Q0Value {
        Q0Value(-&self.0)
    }
}
