//! Exact rational scalars.
//!
//! `Scalar` wraps a [`BigRational`], which keeps every value reduced with a
//! strictly positive denominator. The textual form is always `p/q`, e.g.
//! `-48/7` or `3/1`; parsing also accepts a bare integer.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{QidError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(value: BigRational) -> Self {
        Scalar(value)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big(self) -> BigRational {
        self.0
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(QidError::DivisionByZero);
        }
        Ok(Scalar(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        if rhs.is_zero() {
            return Err(QidError::DivisionByZero);
        }
        Ok(Scalar(&self.0 / &rhs.0))
    }

    /// Integer power. Negative exponents need a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            if self.is_zero() {
                return Err(QidError::DivisionByZero);
            }
            return Ok(Scalar(num_traits::pow(
                self.0.recip(),
                exp.unsigned_abs() as usize,
            )));
        }
        Ok(Scalar(num_traits::pow(self.0.clone(), exp as usize)))
    }

    /// `(-1)^exp` as a scalar.
    pub fn sign_power(exp: i64) -> Self {
        if exp.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = QidError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || QidError::Parse(s.to_string());
        let s_trim = s.trim();
        let (num, den) = match s_trim.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s_trim, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Scalar(BigRational::new(num, den)))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(value: BigRational) -> Self {
        Scalar(value)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($tr::$method(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar($tr::$method(self.0, &rhs.0))
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($tr::$method(&self.0, rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                Scalar($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $atr<Scalar> for Scalar {
            fn $amethod(&mut self, rhs: Scalar) {
                $atr::$amethod(&mut self.0, rhs.0);
            }
        }
        impl<'a> $atr<&'a Scalar> for Scalar {
            fn $amethod(&mut self, rhs: &'a Scalar) {
                $atr::$amethod(&mut self.0, &rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);
// Division panics on a zero divisor, like BigRational. Guarded call sites use
// `checked_div`.
forward_binop!(Div, div, DivAssign, div_assign);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

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

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Scalar> for Scalar {
    fn product<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

/// Shorthand for `Scalar::ratio`.
pub fn s(num: i64, den: i64) -> Scalar {
    Scalar::ratio(num, den)
}
