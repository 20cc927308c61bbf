//! Statistical cross-check of [`median_binomial`] by seeded sampling.
//!
//! This is the only place floating point appears: the exact CDF is rounded
//! down to a double for inverse-CDF sampling. The verdict compares the
//! empirical median with the exact classification.
//!
//! False-failure probability. Let `N` be the sample count and `t = (N-1)/2`
//! the index of the lower median. For an exact `Unique(m)` the empirical
//! median differs from `m` only if the count of draws `<= m-1` reaches
//! `N/2`, or the count of draws `<= m` stays below `N/2`. Hoeffding bounds
//! these by `exp(-2N(1/2 - F(m-1))^2) + exp(-2N(F(m) - 1/2)^2)`. For
//! `Interval(m1, m2)` the gaps are `b(m1)` and `b(m2)`. At `N = 10^6` both
//! acceptance configurations (`B(10, 3/10)` and `B(3, 1/2)`) are below
//! `10^-5000`; [`false_failure_bound`] evaluates the bound for any input.

use binmed_core::{median_binomial, Binomial, MedianResult, Rational, Result};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::format::MedianJson;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McVerdict {
    pub n: u32,
    pub p: String,
    pub samples: u64,
    pub seed: u64,
    pub empirical_median: u32,
    pub exact: MedianJson,
    pub agrees: bool,
    pub false_failure_bound: f64,
}

/// `r` rounded down to a multiple of `2^-53`, for `r` in `[0, 1]`.
pub fn unit_to_f64(r: &Rational) -> f64 {
    let scaled = (r.numer() << 53u32) / r.denom();
    scaled.to_f64().expect("fits in 54 bits") / (1u64 << 53) as f64
}

/// Draws one variate from the tabulated CDF.
fn sample(cdf: &[f64], rng: &mut ChaCha8Rng) -> usize {
    let u: f64 = rng.random();
    cdf.iter().position(|&f| u < f).unwrap_or(cdf.len() - 1)
}

/// Hoeffding bound on the probability that the lower empirical median of
/// `samples` draws falls outside the exact median set.
pub fn false_failure_bound(n: u32, p: &Rational, samples: u64) -> Result<f64> {
    let dist = Binomial::new(n, p.clone())?;
    let exact = median_binomial(n, p)?;
    let half = Rational::half();
    let (below, above) = match &exact {
        MedianResult::Unique(m) => {
            let m = m.numer().to_i64().expect("median is a small integer");
            (&half - &dist.cdf(m - 1), &dist.cdf(m) - &half)
        }
        MedianResult::Interval(m1, m2) => {
            let m1 = m1.numer().to_i64().expect("small integer");
            let m2 = m2.numer().to_i64().expect("small integer");
            (dist.pmf(m1), dist.pmf(m2))
        }
    };
    let n_f = samples as f64;
    let term = |gap: &Rational| (-2.0 * n_f * unit_to_f64(gap).powi(2)).exp();
    Ok(term(&below) + term(&above))
}

pub fn mc_median_check(n: u32, p: &Rational, samples: u64, seed: u64) -> Result<McVerdict> {
    assert!(samples >= 1, "at least one sample");
    let dist = Binomial::new(n, p.clone())?;
    let exact = median_binomial(n, p)?;
    let mut cdf: Vec<f64> = (0..=n as i64).map(|k| unit_to_f64(&dist.cdf(k))).collect();
    *cdf.last_mut().expect("n + 1 entries") = 1.0;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; n as usize + 1];
    for _ in 0..samples {
        counts[sample(&cdf, &mut rng)] += 1;
    }
    // lower median: order statistic at index (N - 1) / 2
    let target = (samples - 1) / 2;
    let mut seen = 0;
    let mut empirical = 0;
    for (k, c) in counts.iter().enumerate() {
        seen += c;
        if seen > target {
            empirical = k as u32;
            break;
        }
    }
    let agrees = exact.contains(&Rational::from_integer(empirical as i64));
    Ok(McVerdict {
        n,
        p: p.to_string(),
        samples,
        seed,
        empirical_median: empirical,
        exact: MedianJson::from(&exact),
        agrees,
        false_failure_bound: false_failure_bound(n, p, samples)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn degenerate_point_masses() {
        let v = mc_median_check(5, &Rational::zero(), 100, 3).unwrap();
        assert_eq!(v.empirical_median, 0);
        assert!(v.agrees);
        let v = mc_median_check(5, &Rational::one(), 100, 3).unwrap();
        assert_eq!(v.empirical_median, 5);
        assert!(v.agrees);
    }

    #[test]
    fn single_sample_is_its_own_median() {
        let v = mc_median_check(4, &r(1, 2), 1, 9).unwrap();
        assert!(v.empirical_median <= 4);
    }

    #[test]
    fn small_run_agrees() {
        let v = mc_median_check(10, &r(3, 10), 20_000, 42).unwrap();
        assert!(v.agrees);
        assert_eq!(v.exact, MedianJson::Unique { m: "3/1".into() });
        assert!(v.false_failure_bound < 1e-9);
    }

    #[test]
    fn unit_conversion() {
        assert_eq!(unit_to_f64(&r(1, 2)), 0.5);
        assert_eq!(unit_to_f64(&Rational::one()), 1.0);
        assert_eq!(unit_to_f64(&Rational::zero()), 0.0);
        assert!((unit_to_f64(&r(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_probability() {
        assert!(mc_median_check(3, &r(4, 3), 10, 0).is_err());
    }
}
