//! Critical probabilities `p_{n,k}`: the unique `p` in `(0, 1)` with
//! `B(k-1, n, p) = 1/2`, i.e. the only success probabilities at which
//! `B(n, p)` has the median interval `[k-1, k]`.
//!
//! Each `p_{n,k}` is the root in `(0, 1)` of the integer polynomial
//! `2 B(k-1, n, p) - 1`, which runs from `+1` at `p = 0` down to `-1` at
//! `p = 1` and is strictly decreasing in between. Roots are isolated by
//! bisection on exact dyadic rationals, and [`certify`] assembles
//! per-instance evidence that a root is irrational (or exactly `1/2`).

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binom_coeff, divisors};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::rational::{render_scaled, Rational};

/// Enclosure width used when none is given: `10^-30`.
pub fn default_width() -> Rational {
    Rational::pow10_inv(30)
}

/// Expansion of `b(j, n, p) = C(n,j) p^j (1-p)^(n-j)`; zero outside `0..=n`.
pub fn pmf_poly(n: u32, j: i64) -> IntPolynomial {
    if j < 0 || j > n as i64 {
        return IntPolynomial::zero();
    }
    let tail = IntPolynomial::one_minus_p().pow(n - j as u32);
    let head = IntPolynomial::monomial(binom_coeff(n as u64, j), j as usize);
    &head * &tail
}

/// Expansion of `B(j, n, p) = sum_{i<=j} b(i, n, p)`.
///
/// Walks `i` downward from `j` so each `(1-p)^(n-i)` is one convolution
/// with `[1, -1]` away from the previous one.
pub fn cdf_poly(n: u32, j: i64) -> IntPolynomial {
    if j < 0 {
        return IntPolynomial::zero();
    }
    let j = j.min(n as i64) as u32;
    let mut acc = alloc::vec![BigInt::zero(); n as usize + 1];
    let one_minus = IntPolynomial::one_minus_p();
    let mut tail = one_minus.pow(n - j);
    for i in (0..=j).rev() {
        let c = binom_coeff(n as u64, i as i64);
        for (t, x) in tail.coeffs().iter().enumerate() {
            acc[i as usize + t] += &c * x;
        }
        if i > 0 {
            tail = &tail * &one_minus;
        }
    }
    IntPolynomial::new(acc)
}

/// `2 B(k-1, n, p) - 1` with integer coefficients, for `1 <= k <= n`.
pub fn critical_poly(n: u32, k: u32) -> Result<IntPolynomial> {
    check_index(n, k)?;
    let twice = cdf_poly(n, k as i64 - 1).scale(&BigInt::from(2));
    Ok(&twice - &IntPolynomial::constant(1))
}

fn check_index(n: u32, k: u32) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::IndexOutOfRange { n, k: k as i64 });
    }
    Ok(())
}

/// `ceil(n / 2)`.
pub fn middle_index(n: u32) -> u32 {
    n.div_ceil(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RootEnclosure {
    /// The polynomial vanishes exactly here.
    Exact(Rational),
    /// Strictly opposite signs at `lo < hi`.
    Bracket { lo: Rational, hi: Rational },
}

impl RootEnclosure {
    pub fn lo(&self) -> &Rational {
        match self {
            RootEnclosure::Exact(r) => r,
            RootEnclosure::Bracket { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &Rational {
        match self {
            RootEnclosure::Exact(r) => r,
            RootEnclosure::Bracket { hi, .. } => hi,
        }
    }

    pub fn width(&self) -> Rational {
        self.hi() - self.lo()
    }

    /// Whether everything in `self` lies strictly below everything in `other`.
    pub fn is_below(&self, other: &RootEnclosure) -> bool {
        self.hi() < other.lo()
    }

    /// Number of fractional decimal digits, at most `max_digits`, on which
    /// `lo` and `hi` agree after truncation. Those digits are digits of the
    /// enclosed root.
    pub fn agreeing_digits(&self, max_digits: u32) -> u32 {
        let (lo, hi) = (self.lo(), self.hi());
        let mut d = 0;
        while d < max_digits && lo.scaled_trunc(d + 1) == hi.scaled_trunc(d + 1) {
            d += 1;
        }
        d
    }

    /// Decimal rendering that never shows a digit the enclosure does not
    /// determine. Exact roots are truncated to `max_digits`.
    pub fn decimal(&self, max_digits: u32) -> String {
        match self {
            RootEnclosure::Exact(r) => r.to_decimal(max_digits),
            RootEnclosure::Bracket { lo, .. } => {
                let d = self.agreeing_digits(max_digits);
                render_scaled(&lo.scaled_trunc(d), d, false)
            }
        }
    }
}

/// Bisection state on a polynomial with a sign change over `[lo, hi]`.
#[derive(Debug, Clone)]
struct Bisection<'a> {
    poly: &'a IntPolynomial,
    enclosure: RootEnclosure,
    lo_sign: Ordering,
    steps: u32,
}

impl<'a> Bisection<'a> {
    fn unit_interval(poly: &'a IntPolynomial) -> Self {
        let lo_sign = poly.sign_at(&Rational::zero());
        debug_assert_eq!(lo_sign.reverse(), poly.sign_at(&Rational::one()));
        Bisection {
            poly,
            enclosure: RootEnclosure::Bracket { lo: Rational::zero(), hi: Rational::one() },
            lo_sign,
            steps: 0,
        }
    }

    /// One halving. No-op on an exact root.
    fn step(&mut self) {
        let RootEnclosure::Bracket { lo, hi } = &self.enclosure else {
            return;
        };
        self.steps += 1;
        let mid = lo.midpoint(hi);
        let s = self.poly.sign_at(&mid);
        self.enclosure = if s == Ordering::Equal {
            RootEnclosure::Exact(mid)
        } else if s == self.lo_sign {
            RootEnclosure::Bracket { lo: mid, hi: hi.clone() }
        } else {
            RootEnclosure::Bracket { lo: lo.clone(), hi: mid }
        };
    }

    fn is_exact(&self) -> bool {
        matches!(self.enclosure, RootEnclosure::Exact(_))
    }

    /// Halves until `done` holds on the bracket or an exact root turns up.
    fn run_until(
        &mut self,
        max_steps: u32,
        n: u32,
        done: impl Fn(&Rational, &Rational) -> bool,
    ) -> Result<()> {
        while let RootEnclosure::Bracket { lo, hi } = &self.enclosure {
            if done(lo, hi) {
                break;
            }
            if self.steps >= max_steps {
                return Err(Error::RefinementLimit { n, steps: self.steps });
            }
            self.step();
        }
        Ok(())
    }
}

/// Smallest `s` with `2^-s <= width`.
fn steps_for_width(width: &Rational) -> u32 {
    let mut s = 0;
    let mut scaled = width.numer().clone();
    while &scaled < width.denom() {
        scaled <<= 1;
        s += 1;
    }
    s
}

fn positive_width(width: &Rational) -> Result<()> {
    if width.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveWidth)
    }
}

/// Extra halvings allowed beyond the width target, to move a bracket
/// endpoint off `0`, `1` or `1/2`.
const SLACK_STEPS: u32 = 256;

/// Certified enclosure of `p_{n,k}` of width at most `width`, with both
/// bracket endpoints strictly inside `(0, 1)`.
pub fn isolate_root(n: u32, k: u32, width: &Rational) -> Result<RootEnclosure> {
    check_index(n, k)?;
    positive_width(width)?;
    let poly = critical_poly(n, k)?;
    isolate_in_unit_interval(&poly, n, width)
}

fn isolate_in_unit_interval(poly: &IntPolynomial, n: u32, width: &Rational) -> Result<RootEnclosure> {
    let zero = Rational::zero();
    let one = Rational::one();
    let mut b = Bisection::unit_interval(poly);
    b.run_until(steps_for_width(width) + SLACK_STEPS, n, |lo, hi| {
        &(hi - lo) <= width && lo > &zero && hi < &one
    })?;
    Ok(b.enclosure)
}

/// All rational numbers in the open interval `(lo, hi)` allowed as roots of
/// `poly` by the Rational Root Theorem, ascending and without duplicates.
/// Zero is included when `p` divides `poly` and `0` is in range.
pub fn rational_root_candidates(poly: &IntPolynomial, lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let (zero_mult, rest) = poly.strip_zero_root();
    let mut out = BTreeSet::new();
    if rest.is_zero() {
        return Vec::new();
    }
    if zero_mult > 0 {
        out.insert(Rational::zero());
    }
    let nums = divisors(&rest.constant_coeff());
    let dens = divisors(&rest.leading_coeff());
    for q in &nums {
        for r in &dens {
            for num in [q.clone(), -q] {
                let c = Rational::new(num, r.clone()).expect("divisors are positive");
                out.insert(c);
            }
        }
    }
    out.into_iter().filter(|c| lo < c && c < hi).collect()
}

/// Every rational root of `poly` in the open interval `(lo, hi)`, found by
/// exact evaluation at each Rational Root Theorem candidate. The zero
/// polynomial yields no roots.
pub fn rational_root_scan(poly: &IntPolynomial, lo: &Rational, hi: &Rational) -> Vec<Rational> {
    rational_root_candidates(poly, lo, hi)
        .into_iter()
        .filter(|c| poly.sign_at(c) == Ordering::Equal)
        .collect()
}

/// Outcome of an exact polynomial identity check with both sides kept as
/// evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
}

impl IdentityCheck {
    fn new(lhs: IntPolynomial, rhs: IntPolynomial) -> Self {
        IdentityCheck { holds: lhs == rhs, lhs, rhs }
    }
}

/// Compares `d/dp B(j, n, p)` against `-n b(j, n-1, p)` coefficient by
/// coefficient, for `0 <= j <= n-1`.
pub fn derivative_identity_check(n: u32, j: u32) -> Result<IdentityCheck> {
    if n == 0 || j >= n {
        return Err(Error::IndexOutOfRange { n, k: j as i64 });
    }
    let lhs = cdf_poly(n, j as i64).derivative();
    let rhs = pmf_poly(n - 1, j as i64).scale(&-BigInt::from(n));
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Checks `P_{n,i}(p) = -P_{n,n-i+1}(1-p)` where `P_{n,k}` is the critical
/// polynomial. The identity maps the root of one onto one minus the root of
/// the other.
pub fn symmetry_identity_check(n: u32, i: u32) -> Result<IdentityCheck> {
    let lhs = critical_poly(n, i)?;
    let partner = critical_poly(n, n - i + 1)?;
    let rhs = -&partner.compose_one_minus();
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Enclosures of `p_{n,1}, ..., p_{n,n}`, each refined until neighbours are
/// disjoint. `Ok(None)` means two disjoint neighbours came out in the wrong
/// order.
pub fn separated_enclosures(n: u32, width: &Rational) -> Result<Option<Vec<RootEnclosure>>> {
    positive_width(width)?;
    if n == 0 {
        return Err(Error::IndexOutOfRange { n, k: 0 });
    }
    let polys = (1..=n).map(|k| critical_poly(n, k)).collect::<Result<Vec<_>>>()?;
    let target = steps_for_width(width);
    let cap = (4 * target).max(SLACK_STEPS);
    let zero = Rational::zero();
    let one = Rational::one();
    let mut states = Vec::with_capacity(polys.len());
    for poly in &polys {
        let mut b = Bisection::unit_interval(poly);
        b.run_until(target + SLACK_STEPS, n, |lo, hi| {
            &(hi - lo) <= width && lo > &zero && hi < &one
        })?;
        states.push(b);
    }
    loop {
        let mut settled = true;
        for i in 0..states.len().saturating_sub(1) {
            let (left, right) = states.split_at_mut(i + 1);
            let (a, b) = (&mut left[i], &mut right[0]);
            if a.enclosure.is_below(&b.enclosure) {
                continue;
            }
            if b.enclosure.is_below(&a.enclosure) {
                return Ok(None);
            }
            settled = false;
            if (a.is_exact() && b.is_exact()) || a.steps.max(b.steps) >= cap {
                return Err(Error::RefinementLimit { n, steps: a.steps.max(b.steps) });
            }
            a.step();
            b.step();
        }
        if settled {
            return Ok(Some(states.into_iter().map(|b| b.enclosure).collect()));
        }
    }
}

/// Confirms `p_{n,1} < p_{n,2} < ... < p_{n,n}` by separating enclosures.
///
/// Each enclosure may be halved up to four times the number of steps the
/// requested width implies (and never fewer than 256 times); past that the
/// check fails with [`Error::RefinementLimit`].
pub fn monotonicity_check(n: u32, width: &Rational) -> Result<bool> {
    Ok(separated_enclosures(n, width)?.is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrationalityCertificate {
    pub n: u32,
    pub k: u32,
    pub status: CertificateStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateStatus {
    /// `p_{n,k} = root`; only `1/2` for odd `n` and `k = ceil(n/2)`.
    ExactRational { root: Rational },
    /// The root lies in `(1/2, 1)` and the polynomial has constant term 1,
    /// so a rational root would be some `1/r`, none of which lies in that
    /// interval. `excluded_candidates` lists every Rational Root Theorem
    /// candidate in `(0, 1)`, each verified to be a non-root.
    IrrationalUpperHalf {
        enclosure: RootEnclosure,
        constant_coeff: BigInt,
        excluded_candidates: Vec<Rational>,
    },
    /// `p_{n,k} = 1 - p_{n,partner_k}` with the partner certified irrational.
    IrrationalBySymmetry { partner_k: u32, partner: Box<IrrationalityCertificate> },
}

fn falsified(n: u32, k: u32, reason: String) -> Error {
    Error::Falsified { n, k, reason }
}

/// [`certify_with_width`] at [`default_width`].
pub fn certify(n: u32, k: u32) -> Result<IrrationalityCertificate> {
    certify_with_width(n, k, &default_width())
}

/// Builds the irrationality certificate for `p_{n,k}`, enclosing upper-half
/// roots to at most `width`. Any contradicting evidence is reported as
/// [`Error::Falsified`].
pub fn certify_with_width(n: u32, k: u32, width: &Rational) -> Result<IrrationalityCertificate> {
    check_index(n, k)?;
    positive_width(width)?;
    let middle = middle_index(n);
    let status = if n % 2 == 1 && k == middle {
        let poly = critical_poly(n, k)?;
        let half = Rational::half();
        if poly.sign_at(&half) != Ordering::Equal {
            return Err(falsified(n, k, format!("polynomial is {} at 1/2", poly.eval(&half))));
        }
        CertificateStatus::ExactRational { root: half }
    } else if k > middle {
        upper_half(n, k, width)?
    } else {
        let partner_k = n - k + 1;
        let check = symmetry_identity_check(n, k)?;
        if !check.holds {
            return Err(falsified(n, k, format!("symmetry identity fails against k = {partner_k}")));
        }
        let partner = certify_with_width(n, partner_k, width)?;
        CertificateStatus::IrrationalBySymmetry { partner_k, partner: Box::new(partner) }
    };
    Ok(IrrationalityCertificate { n, k, status })
}

fn upper_half(n: u32, k: u32, width: &Rational) -> Result<CertificateStatus> {
    let poly = critical_poly(n, k)?;
    let constant_coeff = poly.constant_coeff();
    if !constant_coeff.is_one() {
        return Err(falsified(n, k, format!("constant coefficient is {constant_coeff}")));
    }
    let half = Rational::half();
    let one = Rational::one();
    let mut b = Bisection::unit_interval(&poly);
    b.run_until(steps_for_width(width) + SLACK_STEPS, n, |lo, hi| {
        &(hi - lo) <= width && lo > &half && hi < &one
    })?;
    if let RootEnclosure::Exact(r) = &b.enclosure {
        return Err(falsified(n, k, format!("bisection hit the rational root {r}")));
    }
    let candidates = rational_root_candidates(&poly, &Rational::zero(), &one);
    if let Some(root) = candidates.iter().find(|c| poly.sign_at(c) == Ordering::Equal) {
        return Err(falsified(n, k, format!("rational root {root} found")));
    }
    Ok(CertificateStatus::IrrationalUpperHalf {
        enclosure: b.enclosure,
        constant_coeff,
        excluded_candidates: candidates,
    })
}

impl IrrationalityCertificate {
    /// Re-checks every claim in the certificate from scratch.
    pub fn verify(&self) -> Result<()> {
        let (n, k) = (self.n, self.k);
        check_index(n, k)?;
        let middle = middle_index(n);
        let poly = critical_poly(n, k)?;
        let fail = |reason: &str| Err(falsified(n, k, String::from(reason)));
        match &self.status {
            CertificateStatus::ExactRational { root } => {
                if n % 2 == 0 || k != middle || *root != Rational::half() {
                    return fail("exact rational claimed outside the odd middle index");
                }
                if poly.sign_at(root) != Ordering::Equal {
                    return fail("claimed root does not vanish");
                }
            }
            CertificateStatus::IrrationalUpperHalf { enclosure, constant_coeff, excluded_candidates } => {
                if k <= middle {
                    return fail("upper-half certificate for a lower index");
                }
                let RootEnclosure::Bracket { lo, hi } = enclosure else {
                    return fail("enclosure is an exact rational");
                };
                if !(&Rational::half() < lo && lo < hi && hi < &Rational::one()) {
                    return fail("enclosure not inside (1/2, 1)");
                }
                let (slo, shi) = (poly.sign_at(lo), poly.sign_at(hi));
                if slo == Ordering::Equal || slo != shi.reverse() {
                    return fail("no sign change across the enclosure");
                }
                if !constant_coeff.is_one() || poly.constant_coeff() != *constant_coeff {
                    return fail("constant coefficient is not 1");
                }
                let expected = rational_root_candidates(&poly, &Rational::zero(), &Rational::one());
                if *excluded_candidates != expected {
                    return fail("candidate list is incomplete");
                }
                if excluded_candidates.iter().any(|c| poly.sign_at(c) == Ordering::Equal) {
                    return fail("a candidate is a root");
                }
                // with constant term 1 every candidate has numerator 1; none can sit in the enclosure
                if excluded_candidates.iter().any(|c| c.numer().abs() != BigInt::one() || (lo <= c && c <= hi)) {
                    return fail("candidate inside the enclosure");
                }
            }
            CertificateStatus::IrrationalBySymmetry { partner_k, partner } => {
                if *partner_k != n - k + 1 || partner.n != n || partner.k != *partner_k {
                    return fail("partner index mismatch");
                }
                if !matches!(partner.status, CertificateStatus::IrrationalUpperHalf { .. }) {
                    return fail("partner is not an upper-half certificate");
                }
                if !symmetry_identity_check(n, k)?.holds {
                    return fail("symmetry identity fails");
                }
                partner.verify()?;
            }
        }
        Ok(())
    }

    /// Whether the certificate asserts `p_{n,k}` is irrational.
    pub fn is_irrational(&self) -> bool {
        !matches!(self.status, CertificateStatus::ExactRational { .. })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn small_critical_polynomials() {
        assert_eq!(critical_poly(1, 1).unwrap(), p(&[1, -2]));
        assert_eq!(critical_poly(2, 1).unwrap(), p(&[1, -4, 2]));
        assert_eq!(critical_poly(2, 2).unwrap(), p(&[1, 0, -2]));
        assert_eq!(critical_poly(3, 2).unwrap(), p(&[1, 0, -6, 4]));
        assert!(matches!(critical_poly(3, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(critical_poly(3, 4), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(critical_poly(0, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn cdf_poly_matches_sum_of_pmf_polys() {
        for n in 0..12u32 {
            for j in -1..=n as i64 + 1 {
                let direct = (0..=j).fold(IntPolynomial::zero(), |acc, i| &acc + &pmf_poly(n, i));
                assert_eq!(cdf_poly(n, j), direct, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn derivative_identity_examples() {
        let c = derivative_identity_check(2, 0).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, p(&[-2, 2]));
        let c = derivative_identity_check(1, 0).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, p(&[-1]));
        let c = derivative_identity_check(4, 3).unwrap();
        assert!(c.holds);
        assert_eq!(c.rhs, p(&[0, 0, 0, -4]));
        assert!(derivative_identity_check(4, 4).is_err());
    }

    #[test]
    fn symmetry_identity_examples() {
        let c = symmetry_identity_check(2, 1).unwrap();
        assert!(c.holds);
        assert_eq!(c.rhs, p(&[1, -4, 2]));
        assert!(symmetry_identity_check(3, 2).unwrap().holds);
        assert!(symmetry_identity_check(1, 1).unwrap().holds);
    }

    #[test]
    fn rational_root_scan_examples() {
        let (zero, one) = (Rational::zero(), Rational::one());
        assert_eq!(rational_root_scan(&p(&[1, -2]), &zero, &one), vec![r(1, 2)]);
        assert!(rational_root_scan(&p(&[1, -4, 2]), &zero, &one).is_empty());
        assert_eq!(rational_root_scan(&p(&[1, 0, -6, 4]), &zero, &one), vec![r(1, 2)]);
        // (2p - 1)(3p + 2) p on (-1, 1)
        let poly = p(&[0, -2, 1, 6]);
        assert_eq!(rational_root_scan(&poly, &r(-1, 1), &one), vec![r(-2, 3), zero.clone(), r(1, 2)]);
        assert!(rational_root_scan(&IntPolynomial::zero(), &zero, &one).is_empty());
    }

    #[test]
    fn candidate_enumeration_is_complete() {
        // 6p^2 - 5p + 1: constant 1, leading 6
        let c = rational_root_candidates(&p(&[1, -5, 6]), &Rational::zero(), &Rational::one());
        assert_eq!(c, vec![r(1, 6), r(1, 3), r(1, 2)]);
    }

    #[test]
    fn isolate_linear_case_hits_exactly() {
        assert_eq!(isolate_root(1, 1, &r(1, 1000)).unwrap(), RootEnclosure::Exact(r(1, 2)));
    }

    #[test]
    fn isolate_brackets_respect_invariants() {
        let width = Rational::pow10_inv(12);
        for (n, k) in [(2, 1), (2, 2), (3, 1), (5, 4), (10, 7)] {
            let enc = isolate_root(n, k, &width).unwrap();
            let RootEnclosure::Bracket { lo, hi } = &enc else { panic!("unexpected exact root") };
            let poly = critical_poly(n, k).unwrap();
            assert!(lo > &Rational::zero() && hi < &Rational::one() && lo < hi);
            assert!(enc.width() <= width);
            assert_eq!(poly.sign_at(lo), Ordering::Greater);
            assert_eq!(poly.sign_at(hi), Ordering::Less);
        }
    }

    #[test]
    fn coarse_width_still_leaves_the_endpoints() {
        let enc = isolate_root(2, 2, &r(5, 1)).unwrap();
        assert!(enc.lo() > &Rational::zero() && enc.hi() < &Rational::one());
    }

    #[test]
    fn isolate_rejects_bad_inputs() {
        assert_eq!(isolate_root(2, 1, &Rational::zero()), Err(Error::NonPositiveWidth));
        assert_eq!(isolate_root(2, 1, &r(-1, 2)), Err(Error::NonPositiveWidth));
        assert!(matches!(isolate_root(2, 3, &r(1, 2)), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn decimal_rendering() {
        let enc = RootEnclosure::Bracket { lo: r(7071, 10000), hi: r(7072, 10000) };
        assert_eq!(enc.decimal(10), "0.707");
        assert_eq!(enc.decimal(2), "0.70");
        let enc = RootEnclosure::Bracket { lo: r(1, 10), hi: r(9, 10) };
        assert_eq!(enc.decimal(10), "0");
        assert_eq!(RootEnclosure::Exact(r(1, 2)).decimal(30), "0.5");
        let enc = isolate_root(2, 2, &Rational::pow10_inv(20)).unwrap();
        assert_eq!(enc.decimal(15), "0.707106781186547");
    }

    #[test]
    fn monotonicity_examples() {
        let w = Rational::pow10_inv(6);
        assert!(monotonicity_check(1, &w).unwrap());
        assert!(monotonicity_check(2, &w).unwrap());
        assert!(monotonicity_check(3, &w).unwrap());
        let encs = separated_enclosures(3, &w).unwrap().unwrap();
        assert_eq!(encs[1], RootEnclosure::Exact(r(1, 2)));
        assert!(encs[0].hi() < &r(21, 100) && encs[2].lo() > &r(79, 100));
        assert!(monotonicity_check(12, &r(1, 2)).unwrap());
    }

    #[test]
    fn certificate_shapes() {
        let c = certify(3, 2).unwrap();
        assert_eq!(c.status, CertificateStatus::ExactRational { root: r(1, 2) });
        assert!(!c.is_irrational());
        c.verify().unwrap();

        let c = certify(2, 2).unwrap();
        match &c.status {
            CertificateStatus::IrrationalUpperHalf { enclosure, constant_coeff, excluded_candidates } => {
                assert!(enclosure.lo() > &Rational::half() && enclosure.hi() < &Rational::one());
                assert!(constant_coeff.is_one());
                // candidates for 1 - 2p^2 in (0, 1): just 1/2, which is not a root
                assert_eq!(excluded_candidates, &vec![r(1, 2)]);
            }
            other => panic!("unexpected {other:?}"),
        }
        c.verify().unwrap();

        let c = certify(2, 1).unwrap();
        match &c.status {
            CertificateStatus::IrrationalBySymmetry { partner_k, partner } => {
                assert_eq!(*partner_k, 2);
                assert_eq!(partner.k, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        c.verify().unwrap();
        assert!(c.is_irrational());
    }

    #[test]
    fn tampered_certificates_fail_verification() {
        let mut c = certify(4, 3).unwrap();
        if let CertificateStatus::IrrationalUpperHalf { excluded_candidates, .. } = &mut c.status {
            excluded_candidates.pop();
        }
        assert!(matches!(c.verify(), Err(Error::Falsified { .. })));

        let forged = IrrationalityCertificate {
            n: 4,
            k: 2,
            status: CertificateStatus::ExactRational { root: r(1, 2) },
        };
        assert!(matches!(forged.verify(), Err(Error::Falsified { .. })));

        let wrong_partner = IrrationalityCertificate {
            n: 4,
            k: 1,
            status: CertificateStatus::IrrationalBySymmetry {
                partner_k: 3,
                partner: Box::new(certify(4, 3).unwrap()),
            },
        };
        assert!(matches!(wrong_partner.verify(), Err(Error::Falsified { .. })));
    }
}
