//! Medians of finite discrete distributions.
//!
//! A point `m` is a median when `P(X <= m) >= 1/2` and `P(X >= m) >= 1/2`,
//! and the unique median when both inequalities are strict. When no unique
//! median exists the medians form a closed interval whose endpoints are
//! support points `m1 < m2` with `P(X <= m1) = P(X >= m2) = 1/2`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use crate::binom::Binomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A distribution on finitely many rational points, each carrying positive mass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDiscreteDist {
    support: Vec<Rational>,
    probs: Vec<Rational>,
}

impl FiniteDiscreteDist {
    pub fn new(support: Vec<Rational>, probs: Vec<Rational>) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::InvalidDistribution("empty support"));
        }
        if support.len() != probs.len() {
            return Err(Error::InvalidDistribution("support and probabilities differ in length"));
        }
        if support.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDistribution("support not strictly increasing"));
        }
        if probs.iter().any(|p| !p.is_positive()) {
            return Err(Error::InvalidDistribution("non-positive mass"));
        }
        if probs.iter().sum::<Rational>() != Rational::one() {
            return Err(Error::InvalidDistribution("masses do not sum to 1"));
        }
        Ok(FiniteDiscreteDist { support, probs })
    }

    /// The binomial masses restricted to points of positive mass.
    pub fn from_binomial(dist: &Binomial) -> Self {
        let (support, probs) = dist
            .masses()
            .into_iter()
            .enumerate()
            .filter(|(_, m)| m.is_positive())
            .map(|(k, m)| (Rational::from_integer(k as i64), m))
            .unzip();
        FiniteDiscreteDist { support, probs }
    }

    pub fn support(&self) -> &[Rational] {
        &self.support
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    /// `P(X <= m)`.
    pub fn prob_le(&self, m: &Rational) -> Rational {
        self.points().filter(|(x, _)| *x <= m).map(|(_, p)| p).sum()
    }

    /// `P(X >= m)`.
    pub fn prob_ge(&self, m: &Rational) -> Rational {
        self.points().filter(|(x, _)| *x >= m).map(|(_, p)| p).sum()
    }

    fn points(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.support.iter().zip(&self.probs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MedianResult {
    Unique(Rational),
    Interval(Rational, Rational),
}

impl MedianResult {
    /// Whether `m` lies in the set of medians described by `self`.
    pub fn contains(&self, m: &Rational) -> bool {
        match self {
            MedianResult::Unique(u) => u == m,
            MedianResult::Interval(lo, hi) => lo <= m && m <= hi,
        }
    }

    pub fn is_unique(&self) -> bool {
        matches!(self, MedianResult::Unique(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MedianClass {
    NotAMedian,
    /// A median that is not the unique median.
    WeakMedian,
    UniqueMedian,
}

/// Scans the support upward for the first point whose cumulative mass
/// reaches one half.
pub fn median_finite(dist: &FiniteDiscreteDist) -> MedianResult {
    let half = Rational::half();
    let mut cum = Rational::zero();
    for (i, p) in dist.probs.iter().enumerate() {
        cum = cum + p;
        match cum.cmp(&half) {
            Ordering::Less => continue,
            Ordering::Equal => {
                // the remaining half of the mass sits strictly above, so i + 1 exists
                return MedianResult::Interval(dist.support[i].clone(), dist.support[i + 1].clone());
            }
            Ordering::Greater => return MedianResult::Unique(dist.support[i].clone()),
        }
    }
    unreachable!("masses sum to 1")
}

/// Median of `B(n, p)`, found by an ascending scan with an exact running CDF.
pub fn median_binomial(n: u32, p: &Rational) -> Result<MedianResult> {
    let dist = Binomial::new(n, p.clone())?;
    if p.is_zero() {
        return Ok(MedianResult::Unique(Rational::zero()));
    }
    if *p == Rational::one() {
        return Ok(MedianResult::Unique(Rational::from_integer(n)));
    }
    let (cdf, den) = dist.cdf_numerators();
    for (k, num) in cdf.enumerate() {
        // compare num / den with 1/2
        let twice: BigInt = num * 2u32;
        match twice.cmp(&den) {
            Ordering::Less => continue,
            Ordering::Equal => {
                return Ok(MedianResult::Interval(
                    Rational::from_integer(k as i64),
                    Rational::from_integer(k as i64 + 1),
                ));
            }
            Ordering::Greater => return Ok(MedianResult::Unique(Rational::from_integer(k as i64))),
        }
    }
    unreachable!("B(n, n, p) = 1")
}

/// Classifies an arbitrary rational `m` directly from the two tail sums.
pub fn check_median(dist: &FiniteDiscreteDist, m: &Rational) -> MedianClass {
    let half = Rational::half();
    let le = dist.prob_le(m);
    let ge = dist.prob_ge(m);
    if le < half || ge < half {
        MedianClass::NotAMedian
    } else if le == half || ge == half {
        MedianClass::WeakMedian
    } else {
        MedianClass::UniqueMedian
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn dist(support: &[i64], probs: &[(i64, i64)]) -> FiniteDiscreteDist {
        FiniteDiscreteDist::new(
            support.iter().map(|&x| int(x)).collect(),
            probs.iter().map(|&(a, b)| r(a, b)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn finite_medians() {
        assert_eq!(
            median_finite(&dist(&[0, 1], &[(1, 2), (1, 2)])),
            MedianResult::Interval(int(0), int(1))
        );
        assert_eq!(
            median_finite(&dist(&[0, 1, 2], &[(1, 4), (1, 2), (1, 4)])),
            MedianResult::Unique(int(1))
        );
        assert_eq!(
            median_finite(&dist(&[0, 1, 2, 3], &[(1, 6), (1, 3), (1, 3), (1, 6)])),
            MedianResult::Interval(int(1), int(2))
        );
    }

    #[test]
    fn binomial_medians() {
        assert_eq!(median_binomial(3, &r(1, 2)).unwrap(), MedianResult::Interval(int(1), int(2)));
        assert_eq!(median_binomial(2, &r(1, 2)).unwrap(), MedianResult::Unique(int(1)));
        assert_eq!(median_binomial(1, &r(1, 3)).unwrap(), MedianResult::Unique(int(0)));
        assert_eq!(median_binomial(5, &Rational::zero()).unwrap(), MedianResult::Unique(int(0)));
        assert_eq!(median_binomial(5, &Rational::one()).unwrap(), MedianResult::Unique(int(5)));
        assert_eq!(median_binomial(0, &r(1, 2)).unwrap(), MedianResult::Unique(int(0)));
        assert_eq!(median_binomial(4, &r(5, 3)), Err(Error::ProbabilityOutOfRange));
    }

    #[test]
    fn classification() {
        let b3 = FiniteDiscreteDist::from_binomial(&Binomial::new(3, r(1, 2)).unwrap());
        assert_eq!(check_median(&b3, &r(3, 2)), MedianClass::WeakMedian);
        let b2 = FiniteDiscreteDist::from_binomial(&Binomial::new(2, r(1, 2)).unwrap());
        assert_eq!(check_median(&b2, &int(1)), MedianClass::UniqueMedian);
        assert_eq!(check_median(&b2, &int(0)), MedianClass::NotAMedian);
        assert_eq!(check_median(&b2, &r(1, 2)), MedianClass::NotAMedian);
    }

    #[test]
    fn rejects_bad_distributions() {
        let e = |s: Vec<Rational>, p: Vec<Rational>| FiniteDiscreteDist::new(s, p).unwrap_err();
        assert!(matches!(e(vec![], vec![]), Error::InvalidDistribution(_)));
        assert!(matches!(e(vec![int(0)], vec![r(1, 2), r(1, 2)]), Error::InvalidDistribution(_)));
        assert!(matches!(e(vec![int(1), int(0)], vec![r(1, 2), r(1, 2)]), Error::InvalidDistribution(_)));
        assert!(matches!(e(vec![int(0), int(1)], vec![int(1), int(0)]), Error::InvalidDistribution(_)));
        assert!(matches!(e(vec![int(0), int(1)], vec![r(1, 2), r(1, 3)]), Error::InvalidDistribution(_)));
    }

    #[test]
    fn degenerate_binomial_support() {
        let d = FiniteDiscreteDist::from_binomial(&Binomial::new(4, Rational::one()).unwrap());
        assert_eq!(d.support(), &[int(4)]);
    }
}
