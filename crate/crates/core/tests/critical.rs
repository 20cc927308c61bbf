use std::cmp::Ordering;

use binmed_core::critical::{cdf_poly, middle_index, separated_enclosures};
use binmed_core::{
    certify, critical_poly, derivative_identity_check, isolate_root, symmetry_identity_check, BigInt, Binomial,
    CertificateStatus, Rational, RootEnclosure,
};
use proptest::prelude::*;

/// Integer Newton iteration for `floor(sqrt(m))`.
fn isqrt(m: &BigInt) -> BigInt {
    let mut x = m.clone() + 1u32;
    loop {
        let y = (&x + m / &x) / 2u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Integer Newton iteration for `floor(cbrt(m))`.
fn icbrt(m: &BigInt) -> BigInt {
    let mut x = m.clone() + 1u32;
    loop {
        let y = (&x * 2u32 + m / (&x * &x)) / 3u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

fn pow10(d: u32) -> BigInt {
    BigInt::from(10u32).pow(d)
}

/// `[s, s + 1] / 10^d` bounds for the three closed-form roots.
fn reference(n: u32, k: u32, d: u32) -> (Rational, Rational) {
    let scale = pow10(d);
    let s = match (n, k) {
        // 1/sqrt(2)
        (2, 2) => isqrt(&(pow10(2 * d) / 2u32)),
        // 1 - 1/sqrt(2), rounded down
        (2, 1) => &scale - isqrt(&(pow10(2 * d) / 2u32)) - 1u32,
        // 1 - 2^(-1/3), rounded down
        (3, 1) => &scale - icbrt(&(pow10(3 * d) / 2u32)) - 1u32,
        _ => unreachable!(),
    };
    (Rational::new(s.clone(), scale.clone()).unwrap(), Rational::new(s + 1u32, scale).unwrap())
}

#[test]
fn closed_form_roots() {
    let width = Rational::pow10_inv(30);
    let tol = Rational::pow10_inv(25);
    for (n, k) in [(2, 2), (2, 1), (3, 1)] {
        let enc = isolate_root(n, k, &width).unwrap();
        let (rlo, rhi) = reference(n, k, 40);
        assert!(enc.lo() <= &rhi && &rlo <= enc.hi(), "({n},{k}) misses reference");
        let gap = (enc.lo().midpoint(enc.hi()) - rlo.midpoint(&rhi)).abs();
        assert!(gap <= tol, "({n},{k}) off by {gap}");
    }
    assert_eq!(isolate_root(2, 2, &width).unwrap().decimal(15), "0.707106781186547");
    assert_eq!(isolate_root(2, 1, &width).unwrap().decimal(15), "0.292893218813452");
    assert_eq!(isolate_root(3, 1, &width).unwrap().decimal(15), "0.206299474015900");
}

#[test]
fn constant_coefficient_is_one_up_to_50() {
    for n in 1..=50 {
        for k in 1..=n {
            let poly = critical_poly(n, k).unwrap();
            assert_eq!(poly.constant_coeff(), BigInt::from(1), "n={n} k={k}");
            assert_eq!(poly.degree(), Some(n as usize));
            assert_eq!(poly.eval(&Rational::zero()), Rational::one());
            assert_eq!(poly.eval(&Rational::one()), -Rational::one());
        }
    }
}

#[test]
fn derivative_identity_up_to_30() {
    for n in 1..=30 {
        for j in 0..n {
            assert!(derivative_identity_check(n, j).unwrap().holds, "n={n} j={j}");
        }
    }
}

#[test]
fn symmetry_identity_up_to_30() {
    for n in 1..=30 {
        for i in 1..=n {
            assert!(symmetry_identity_check(n, i).unwrap().holds, "n={n} i={i}");
        }
    }
}

#[test]
fn exact_rational_only_at_odd_middle() {
    let width = Rational::pow10_inv(8);
    for n in 1..=40 {
        for k in 1..=n {
            let cert = binmed_core::critical::certify_with_width(n, k, &width).unwrap();
            let exact = matches!(cert.status, CertificateStatus::ExactRational { .. });
            assert_eq!(exact, n % 2 == 1 && k == middle_index(n), "n={n} k={k}");
            cert.verify().unwrap();
        }
    }
}

#[test]
fn default_certificate_width() {
    let cert = certify(5, 4).unwrap();
    let CertificateStatus::IrrationalUpperHalf { enclosure, .. } = &cert.status else {
        panic!("expected upper-half certificate");
    };
    assert!(enclosure.width() <= Rational::pow10_inv(30));
}

#[test]
fn enclosures_strictly_ordered() {
    for n in 1..=20 {
        let encs = separated_enclosures(n, &Rational::pow10_inv(10)).unwrap().unwrap();
        assert_eq!(encs.len(), n as usize);
        for w in encs.windows(2) {
            assert!(w[0].hi() < w[1].lo());
        }
        for (i, e) in encs.iter().enumerate() {
            // reflection: p_{n,i} = 1 - p_{n,n-i+1}
            let partner = &encs[n as usize - 1 - i];
            assert!(e.lo() <= &partner.hi().complement() && &partner.lo().complement() <= e.hi());
        }
    }
}

fn open_prob() -> impl Strategy<Value = Rational> {
    (2i64..500).prop_flat_map(|b| (1..b, Just(b))).prop_map(|(a, b)| Rational::new(a, b).unwrap())
}

proptest! {
    #[test]
    fn polynomial_agrees_with_cdf(n in 1u32..=30, k_frac in 0.0f64..1.0, p in open_prob()) {
        let k = 1 + (k_frac * n as f64) as u32;
        let poly = critical_poly(n, k).unwrap();
        let cdf = Binomial::new(n, p.clone()).unwrap().cdf(k as i64 - 1);
        let two = Rational::from_integer(2);
        prop_assert_eq!(poly.eval(&p), &two * &cdf - Rational::one());
        prop_assert_eq!(cdf_poly(n, k as i64 - 1).eval(&p), cdf);
    }

    #[test]
    fn strictly_decreasing_on_unit_interval(n in 1u32..=25, k_frac in 0.0f64..1.0, p1 in open_prob(), p2 in open_prob()) {
        prop_assume!(p1 != p2);
        let k = 1 + (k_frac * n as f64) as u32;
        let (lo, hi) = if p1 < p2 { (p1, p2) } else { (p2, p1) };
        let poly = critical_poly(n, k).unwrap();
        prop_assert!(poly.eval(&lo) > poly.eval(&hi));
    }

    #[test]
    fn brackets_change_sign(n in 1u32..=25, k_frac in 0.0f64..1.0, digits in 1u32..40) {
        let k = 1 + (k_frac * n as f64) as u32;
        let width = Rational::pow10_inv(digits);
        let poly = critical_poly(n, k).unwrap();
        match isolate_root(n, k, &width).unwrap() {
            RootEnclosure::Exact(r) => prop_assert_eq!(poly.sign_at(&r), Ordering::Equal),
            RootEnclosure::Bracket { lo, hi } => {
                prop_assert!(Rational::zero() < lo && lo < hi && hi < Rational::one());
                prop_assert!(&hi - &lo <= width);
                prop_assert_eq!(poly.sign_at(&lo), Ordering::Greater);
                prop_assert_eq!(poly.sign_at(&hi), Ordering::Less);
            }
        }
    }
}
