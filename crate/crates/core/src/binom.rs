//! Exact binomial distribution `B(n, p)` at rational `p`.
//!
//! With `p = a/c` every mass `C(n,i) a^i (c-a)^(n-i) / c^n` shares the
//! denominator `c^n`, so the CDF is accumulated as an integer numerator and
//! reduced once at the end.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    n: u32,
    p: Rational,
}

impl Binomial {
    pub fn new(n: u32, p: Rational) -> Result<Self> {
        if !p.is_probability() {
            return Err(Error::ProbabilityOutOfRange);
        }
        Ok(Binomial { n, p })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    /// `c^n`, the common denominator of every mass.
    fn denominator(&self) -> BigInt {
        num_traits::Pow::pow(self.p.denom(), self.n)
    }

    /// Integer numerators `C(n,i) a^i (c-a)^(n-i)` for `i = 0..=n`.
    pub(crate) fn mass_numerators(&self) -> impl Iterator<Item = BigInt> + '_ {
        let n = self.n as u64;
        let a = self.p.numer().clone();
        let q = self.p.denom() - self.p.numer();
        // q_pows[m] = q^m
        let mut q_pows = Vec::with_capacity(self.n as usize + 1);
        let mut acc = BigInt::one();
        q_pows.push(acc.clone());
        for _ in 0..n {
            acc *= &q;
            q_pows.push(acc.clone());
        }
        let mut coeff = BigInt::one();
        let mut a_pow = BigInt::one();
        (0..=n).map(move |i| {
            let term = &coeff * &a_pow * &q_pows[(n - i) as usize];
            coeff = &coeff * (n - i) / (i + 1);
            a_pow *= &a;
            term
        })
    }

    /// Cumulative numerators over `c^n`, paired with the denominator.
    pub(crate) fn cdf_numerators(&self) -> (impl Iterator<Item = BigInt> + '_, BigInt) {
        let mut running = BigInt::zero();
        let it = self.mass_numerators().map(move |t| {
            running += t;
            running.clone()
        });
        (it, self.denominator())
    }

    /// `b(k, n, p)`; zero outside `0..=n`.
    pub fn pmf(&self, k: i64) -> Rational {
        if k < 0 || k > self.n as i64 {
            return Rational::zero();
        }
        let num = self.mass_numerators().nth(k as usize).expect("k <= n");
        Rational::new(num, self.denominator()).expect("c^n > 0")
    }

    /// `B(k, n, p) = P(X <= k)`; `0` for `k < 0`, `1` for `k >= n`.
    pub fn cdf(&self, k: i64) -> Rational {
        if k < 0 {
            return Rational::zero();
        }
        if k >= self.n as i64 {
            return Rational::one();
        }
        let (mut it, den) = self.cdf_numerators();
        let num = it.nth(k as usize).expect("k < n");
        Rational::new(num, den).expect("c^n > 0")
    }

    /// `P(X >= k) = 1 - B(k-1, n, p)`.
    pub fn survival(&self, k: i64) -> Rational {
        Rational::one() - self.cdf(k.saturating_sub(1))
    }

    /// All masses `b(0..=n)` as rationals.
    pub fn masses(&self) -> Vec<Rational> {
        let den = self.denominator();
        self.mass_numerators()
            .map(|t| Rational::new(t, den.clone()).expect("c^n > 0"))
            .collect()
    }
}
