//! Theorem battery: every certificate, identity and median check over a
//! range of `n`, assembled into a deterministic report.
//!
//! Randomised checks draw from a ChaCha stream keyed by `(check, n)` under
//! the master seed, so the report does not depend on how the work is split
//! across threads.

use std::time::{Duration, Instant};

use binmed_core::critical::{certify_with_width, critical_poly, middle_index, separated_enclosures};
use binmed_core::{
    check_median, derivative_identity_check, median_binomial, median_finite, symmetry_identity_check, Binomial,
    CertificateStatus, FiniteDiscreteDist, MedianClass, MedianResult, Rational,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Random `p` values drawn per `n` by the median sweep.
pub const SWEEP_SAMPLES_PER_N: u32 = 250;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// Serialises without the wall time, so identical inputs give identical
/// bytes.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub n_range: [u32; 2],
    pub denom_max: u64,
    pub width: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Check {
    Certificates,
    ConstantCoefficient,
    Monotonicity,
    SymmetryIdentity,
    DerivativeIdentity,
    MedianSweep,
    EvaluationConsistency,
}

impl Check {
    const ALL: [Check; 7] = [
        Check::Certificates,
        Check::ConstantCoefficient,
        Check::Monotonicity,
        Check::SymmetryIdentity,
        Check::DerivativeIdentity,
        Check::MedianSweep,
        Check::EvaluationConsistency,
    ];

    fn name(self) -> &'static str {
        match self {
            Check::Certificates => "certificates",
            Check::ConstantCoefficient => "constant_coefficient",
            Check::Monotonicity => "monotonicity",
            Check::SymmetryIdentity => "symmetry_identity",
            Check::DerivativeIdentity => "derivative_identity",
            Check::MedianSweep => "median_sweep",
            Check::EvaluationConsistency => "evaluation_consistency",
        }
    }
}

/// Generator for one `(check, n)` cell.
pub fn cell_rng(seed: u64, check: u64, n: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((check << 32) | n as u64);
    rng
}

/// `a/b` with `b` uniform on `[1, denom_max]` and `a` uniform on `[1, b-1]`;
/// `b = 1` has no such `a` and is redrawn.
pub fn random_probability(rng: &mut impl Rng, denom_max: u64) -> Rational {
    assert!(denom_max >= 2, "need a denominator of at least 2");
    loop {
        let b = rng.random_range(1..=denom_max);
        if b < 2 {
            continue;
        }
        let a = rng.random_range(1..b);
        return Rational::new(a as i64, b as i64).expect("b > 0");
    }
}

/// Median of `B(n, 1/2)`: the interval `[(n-1)/2, (n+1)/2]` for odd `n`,
/// otherwise `n/2`.
pub fn half_median(n: u32) -> MedianResult {
    let n = n as i64;
    if n % 2 == 1 {
        MedianResult::Interval(Rational::from_integer((n - 1) / 2), Rational::from_integer((n + 1) / 2))
    } else {
        MedianResult::Unique(Rational::from_integer(n / 2))
    }
}

/// Outcome of one `(check, n)` cell.
type Cell = (u64, Option<String>);

fn cell(check: Check, n: u32, denom_max: u64, width: &Rational, seed: u64) -> Cell {
    match check {
        Check::Certificates => certificates(n, width),
        Check::ConstantCoefficient => constant_coefficient(n),
        Check::Monotonicity => match separated_enclosures(n, width) {
            Ok(Some(_)) => (1, None),
            Ok(None) => (1, Some(format!("n={n}: enclosures out of order"))),
            Err(e) => (1, Some(format!("n={n}: {e}"))),
        },
        Check::SymmetryIdentity => first_failure((1..=n).map(|i| {
            let ok = symmetry_identity_check(n, i).map(|c| c.holds).unwrap_or(false);
            (!ok).then(|| format!("n={n}, i={i}: symmetry identity fails"))
        })),
        Check::DerivativeIdentity => first_failure((0..n).map(|j| {
            let ok = derivative_identity_check(n, j).map(|c| c.holds).unwrap_or(false);
            (!ok).then(|| format!("n={n}, j={j}: derivative identity fails"))
        })),
        Check::MedianSweep => median_sweep_cell(n, denom_max, seed),
        Check::EvaluationConsistency => {
            let mut rng = cell_rng(seed, Check::EvaluationConsistency as u64, n);
            let two = Rational::from_integer(2);
            first_failure((1..=n).map(|k| {
                let p = random_probability(&mut rng, denom_max.max(2));
                let poly = critical_poly(n, k).expect("1 <= k <= n");
                let cdf = Binomial::new(n, p.clone()).expect("p in (0,1)").cdf(k as i64 - 1);
                let ok = poly.eval(&p) == &two * &cdf - Rational::one();
                (!ok).then(|| format!("n={n}, k={k}, p={p}: polynomial disagrees with CDF"))
            }))
        }
    }
}

fn first_failure(outcomes: impl Iterator<Item = Option<String>>) -> Cell {
    let mut count = 0;
    let mut first = None;
    for o in outcomes {
        count += 1;
        if first.is_none() {
            first = o;
        }
    }
    (count, first)
}

fn certificates(n: u32, width: &Rational) -> Cell {
    let middle = middle_index(n);
    first_failure((1..=n).map(|k| {
        let cert = match certify_with_width(n, k, width) {
            Ok(c) => c,
            Err(e) => return Some(format!("n={n}, k={k}: {e}")),
        };
        let shape_ok = match &cert.status {
            CertificateStatus::ExactRational { .. } => n % 2 == 1 && k == middle,
            CertificateStatus::IrrationalUpperHalf { .. } => k > middle,
            CertificateStatus::IrrationalBySymmetry { partner_k, .. } => {
                k <= middle && !(n % 2 == 1 && k == middle) && *partner_k == n - k + 1
            }
        };
        if !shape_ok {
            return Some(format!("n={n}, k={k}: unexpected certificate shape"));
        }
        cert.verify().err().map(|e| format!("n={n}, k={k}: {e}"))
    }))
}

fn constant_coefficient(n: u32) -> Cell {
    first_failure((1..=n).map(|k| {
        let c = critical_poly(n, k).expect("1 <= k <= n").constant_coeff();
        (c != 1.into()).then(|| format!("n={n}, k={k}: constant coefficient {c}"))
    }))
}

fn median_sweep_cell(n: u32, denom_max: u64, seed: u64) -> Cell {
    let mut rng = cell_rng(seed, Check::MedianSweep as u64, n);
    let half = Rational::half();
    let randomised = (0..SWEEP_SAMPLES_PER_N).map(|_| random_probability(&mut rng, denom_max.max(2)));
    // p = 1/2 is always tested explicitly
    let ps = std::iter::once(half).chain(randomised.collect::<Vec<_>>());
    first_failure(ps.map(|p| {
        let got = median_binomial(n, &p).expect("p in (0,1)");
        let ok = if p == Rational::half() { got == half_median(n) } else { got.is_unique() };
        (!ok).then(|| format!("n={n}, p={p}: median {got:?}"))
    }))
}

/// Runs the whole battery for `1 <= n <= n_max`.
pub fn verify_theorem(n_max: u32, denom_max: u64, width: &Rational, seed: u64) -> VerificationReport {
    assert!(n_max >= 1, "n_max must be positive");
    let start = Instant::now();
    let jobs: Vec<(Check, u32)> = Check::ALL.iter().flat_map(|&c| (1..=n_max).map(move |n| (c, n))).collect();
    let cells: Vec<Cell> = jobs
        .par_iter()
        .map(|&(check, n)| cell(check, n, denom_max, width, seed))
        .collect();
    let checks: Vec<CheckResult> = Check::ALL
        .iter()
        .zip(cells.chunks(n_max as usize))
        .map(|(check, per_n)| {
            let instances = per_n.iter().map(|c| c.0).sum();
            // chunks are in ascending n, so the first failure is the smallest n
            let counterexample = per_n.iter().find_map(|c| c.1.clone());
            CheckResult { name: check.name(), instances, passed: counterexample.is_none(), counterexample }
        })
        .collect();
    VerificationReport {
        n_range: [1, n_max],
        denom_max,
        width: width.to_string(),
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
        wall_time: start.elapsed(),
    }
}

/// Median uniqueness over `instances` random `(n, p)` with `n <= n_max`,
/// skipping the odd-`n`, `p = 1/2` exception. Any interval is reported.
pub fn median_uniqueness_sweep(instances: u64, n_max: u32, denom_max: u64, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexample = None;
    let mut done = 0;
    while done < instances {
        let n = rng.random_range(1..=n_max);
        let p = random_probability(&mut rng, denom_max);
        if n % 2 == 1 && p == Rational::half() {
            continue;
        }
        done += 1;
        let got = median_binomial(n, &p).expect("p in (0,1)");
        if !got.is_unique() && counterexample.is_none() {
            counterexample = Some(format!("n={n}, p={p}: median {got:?}"));
        }
    }
    CheckResult { name: "median_uniqueness", instances, passed: counterexample.is_none(), counterexample }
}

/// Random finite distribution: up to `max_support` distinct rational points
/// with small positive integer weights, normalised to total mass one.
pub fn random_distribution(rng: &mut impl Rng, max_support: usize) -> FiniteDiscreteDist {
    let len = rng.random_range(1..=max_support);
    let scale = rng.random_range(1..=3i64);
    let mut points = std::collections::BTreeSet::new();
    while points.len() < len {
        points.insert(rng.random_range(-30..=30i64));
    }
    let weights: Vec<i64> = (0..len).map(|_| rng.random_range(1..=4)).collect();
    let total: i64 = weights.iter().sum();
    FiniteDiscreteDist::new(
        points.into_iter().map(|x| Rational::new(x, scale).expect("scale > 0")).collect(),
        weights.into_iter().map(|w| Rational::new(w, total).expect("total > 0")).collect(),
    )
    .expect("valid by construction")
}

/// Checks the four median lemmas on one distribution, using tail sums
/// computed here rather than through the library.
pub fn check_lemmas(dist: &FiniteDiscreteDist) -> Result<(), String> {
    let half = Rational::half();
    let tails = |m: &Rational| {
        let mut le = Rational::zero();
        let mut ge = Rational::zero();
        for (x, p) in dist.support().iter().zip(dist.probs()) {
            if x <= m {
                le = &le + p;
            }
            if x >= m {
                ge = &ge + p;
            }
        }
        (le, ge)
    };
    let support = dist.support();
    let mut probes: Vec<Rational> = support.to_vec();
    probes.extend(support.windows(2).map(|w| w[0].midpoint(&w[1])));
    probes.push(&support[0] - &Rational::one());
    probes.push(&support[support.len() - 1] + &Rational::one());

    // half-condition characterises weak medians
    for m in &probes {
        let (le, ge) = tails(m);
        let is_median = le >= half && ge >= half;
        let weak = is_median && (le == half || ge == half);
        let class = check_median(dist, m);
        let expected = if !is_median {
            MedianClass::NotAMedian
        } else if weak {
            MedianClass::WeakMedian
        } else {
            MedianClass::UniqueMedian
        };
        if class != expected {
            return Err(format!("m={m}: classified {class:?}, tails give {expected:?}"));
        }
    }

    // at most one unique median, and it sits in the support with positive mass
    let uniques: Vec<&Rational> =
        probes.iter().filter(|m| check_median(dist, m) == MedianClass::UniqueMedian).collect();
    if uniques.len() > 1 {
        return Err(format!("{} unique medians", uniques.len()));
    }
    for u in &uniques {
        if !support.contains(u) {
            return Err(format!("unique median {u} outside the support"));
        }
    }

    match median_finite(dist) {
        MedianResult::Unique(m) => {
            let idx = support.iter().position(|x| *x == m).ok_or_else(|| format!("{m} not in support"))?;
            if !dist.probs()[idx].is_positive() || uniques != [&m] {
                return Err(format!("unique median {m} inconsistent with classification"));
            }
        }
        MedianResult::Interval(m1, m2) => {
            if m1 >= m2 || !support.contains(&m1) || !support.contains(&m2) {
                return Err(format!("bad interval [{m1}, {m2}]"));
            }
            if tails(&m1).0 != half || tails(&m2).1 != half {
                return Err(format!("interval [{m1}, {m2}] endpoints do not carry half the mass"));
            }
            if !uniques.is_empty() {
                return Err("interval reported alongside a unique median".into());
            }
            let span = &m2 - &m1;
            for t in ["0", "1/4", "1/2", "2/3", "1"] {
                let t: Rational = t.parse().expect("literal");
                let m = &m1 + &(&t * &span);
                if check_median(dist, &m) == MedianClass::NotAMedian {
                    return Err(format!("{m} inside [{m1}, {m2}] is not a median"));
                }
            }
            for x in support.iter().filter(|x| **x < m1 || **x > m2) {
                if check_median(dist, x) != MedianClass::NotAMedian {
                    return Err(format!("{x} outside [{m1}, {m2}] classified as a median"));
                }
            }
        }
    }
    Ok(())
}

/// Lemma checks over `count` random distributions.
pub fn lemma_suite(count: u64, max_support: usize, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexample = None;
    for i in 0..count {
        let dist = random_distribution(&mut rng, max_support);
        if let Err(e) = check_lemmas(&dist) {
            counterexample.get_or_insert_with(|| format!("distribution #{i} {dist:?}: {e}"));
        }
    }
    CheckResult { name: "median_lemmas", instances: count, passed: counterexample.is_none(), counterexample }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_runs_pass() {
        let r = verify_theorem(1, 1, &Rational::pow10_inv(6), 0);
        assert!(r.passed, "{r:?}");
        let r = verify_theorem(3, 50, &Rational::pow10_inv(20), 1);
        assert!(r.passed, "{r:?}");
        assert_eq!(r.checks.len(), Check::ALL.len());
        let certs = &r.checks[0];
        assert_eq!(certs.instances, 6);
    }

    #[test]
    fn report_is_deterministic() {
        let a = verify_theorem(6, 30, &Rational::pow10_inv(10), 5);
        let b = verify_theorem(6, 30, &Rational::pow10_inv(10), 5);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn streams_differ_per_cell() {
        let a: u64 = cell_rng(7, 1, 3).random();
        let b: u64 = cell_rng(7, 1, 4).random();
        let c: u64 = cell_rng(7, 2, 3).random();
        assert!(a != b && a != c);
    }

    #[test]
    fn probabilities_are_interior() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let p = random_probability(&mut rng, 7);
            assert!(p > Rational::zero() && p < Rational::one());
            assert!(p.denom() <= &7.into());
        }
    }

    #[test]
    fn medians_at_one_half() {
        assert_eq!(half_median(5), MedianResult::Interval(Rational::from_integer(2), Rational::from_integer(3)));
        assert_eq!(half_median(4), MedianResult::Unique(Rational::from_integer(2)));
        assert_eq!(half_median(1), median_binomial(1, &Rational::half()).unwrap());
    }

    #[test]
    fn lemma_checks_pass() {
        let r = lemma_suite(200, 12, 3);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn small_uniqueness_sweep() {
        let r = median_uniqueness_sweep(300, 20, 50, 11);
        assert!(r.passed && r.instances == 300);
    }
}
