//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Coefficients in ascending degree, trailing zeros trimmed. The zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `1 - p`.
    pub fn one_minus_p() -> Self {
        Self::from_i64s(&[1, -1])
    }

    /// `c * p^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `p^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_coeff(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::constant(1), |acc, _| &acc * self)
    }

    /// `P(1 - p)`, by Horner's scheme over polynomials.
    pub fn compose_one_minus(&self) -> Self {
        let x = Self::one_minus_p();
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + &Self::constant(c.clone());
        }
        acc
    }

    /// `P(a/b) * b^d` as an integer, where `d` is the degree.
    ///
    /// Homogeneous Horner: `acc <- acc * a + c_i * b^(d-i)`.
    fn scaled_value(&self, x: &Rational) -> BigInt {
        let a = x.numer();
        let b = x.denom();
        let mut acc = BigInt::zero();
        let mut b_pow = BigInt::one();
        for (step, c) in self.coeffs.iter().rev().enumerate() {
            if step == 0 {
                acc = c.clone();
            } else {
                b_pow *= b;
                acc = acc * a + c * &b_pow;
            }
        }
        acc
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let Some(d) = self.degree() else {
            return Rational::zero();
        };
        let den = num_traits::Pow::pow(x.denom(), d as u32);
        Rational::new(self.scaled_value(x), den).expect("positive denominator")
    }

    /// Sign of the value at `x`, without forming the rational.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        self.scaled_value(x).sign().cmp(&num_bigint::Sign::NoSign)
    }

    /// Divides out `p^m` where `m` is the multiplicity of the root at zero.
    pub fn strip_zero_root(&self) -> (usize, Self) {
        let m = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (m, Self::new(self.coeffs[m..].to_vec()))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    /// Schoolbook convolution.
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
