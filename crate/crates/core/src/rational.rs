//! Canonical arbitrary-precision rationals.
//!
//! [`Rational`] wraps `num_rational::BigRational` and only exposes checked
//! constructors, so every value is reduced with a positive denominator and zero
//! is `0/1`. Values are immutable; arithmetic returns fresh values.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in lowest terms, sign carried by the numerator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn half() -> Self {
        Rational(BigRational::new_raw(BigInt::one(), BigInt::from(2)))
    }

    /// `1 / 10^digits`.
    pub fn pow10_inv(digits: u32) -> Self {
        Rational(BigRational::new_raw(BigInt::one(), BigInt::from(10u32).pow(digits)))
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Sign as an ordering against zero.
    pub fn signum(&self) -> Ordering {
        self.numer().sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(Pow::pow(&self.0, exp))
    }

    /// Exact midpoint `(self + other) / 2`.
    pub fn midpoint(&self, other: &Rational) -> Self {
        let sum = &self.0 + &other.0;
        Rational(sum / BigInt::from(2))
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        Rational::one() - self
    }

    /// Whether `0 <= self <= 1`.
    pub fn is_probability(&self) -> bool {
        !self.is_negative() && self.numer() <= self.denom()
    }

    /// `self * 10^digits` truncated toward zero.
    pub fn scaled_trunc(&self, digits: u32) -> BigInt {
        let scaled = self.numer() * BigInt::from(10u32).pow(digits);
        // BigInt division truncates toward zero
        scaled / self.denom()
    }

    /// Decimal expansion truncated toward zero after `digits` fractional
    /// digits, trailing zeros removed. `1/2` renders as `0.5`, `8/27` with
    /// four digits as `0.2962`.
    pub fn to_decimal(&self, digits: u32) -> String {
        render_scaled(&self.scaled_trunc(digits), digits, true)
    }
}

/// Renders `value / 10^digits` in positional notation, optionally trimming
/// trailing fractional zeros.
pub(crate) fn render_scaled(value: &BigInt, digits: u32, trim: bool) -> String {
    let neg = value.is_negative();
    let mag = value.abs().to_string();
    let digits = digits as usize;
    let (int_part, frac_part) = if mag.len() > digits {
        let (i, f) = mag.split_at(mag.len() - digits);
        (String::from(i), String::from(f))
    } else {
        let mut f = String::new();
        for _ in 0..digits - mag.len() {
            f.push('0');
        }
        f.push_str(&mag);
        (String::from("0"), f)
    };
    let frac = if trim { frac_part.trim_end_matches('0') } else { frac_part.as_str() };
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int_part);
    if !frac.is_empty() {
        out.push('.');
        out.push_str(frac);
    }
    out
}

impl fmt::Display for Rational {
    /// Always `num/den`, including integers (`2/1`) and zero (`0/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `A/B` or a bare integer `A`. Decimal points are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let parse_int = |t: &str| -> Result<BigInt> {
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            Some((num, den)) => Rational::new(parse_int(num)?, parse_int(den)?),
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl core::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> core::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// `gcd(|a|, |b|)`; re-exported for callers checking canonical form.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}
