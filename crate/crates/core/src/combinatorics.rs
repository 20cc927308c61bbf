//! Binomial coefficients and integer divisors.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binom_coeff(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut c = BigInt::one();
    for i in 0..k {
        // c = C(n, i) here, and C(n, i) * (n - i) is divisible by i + 1
        c = c * (n - i) / (i + 1);
    }
    c
}

/// Row `n` of Pascal's triangle, `C(n, 0) ..= C(n, n)`.
pub fn binom_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for i in 0..n {
        c = c * (n - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

/// Prime factorisation of `|m|` by trial division, as `(prime, exponent)`
/// pairs in ascending order. Zero and one have no factors.
pub fn factorize(m: &BigInt) -> Vec<(BigInt, u32)> {
    let mut rest = m.abs();
    let mut factors = Vec::new();
    if rest.is_zero() {
        return factors;
    }
    let mut d = BigInt::from(2u32);
    while &d * &d <= rest {
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += if d == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        factors.push((rest, 1));
    }
    factors
}

/// All positive divisors of `|m|`, ascending. Empty for zero.
pub fn divisors(m: &BigInt) -> Vec<BigInt> {
    if m.is_zero() {
        return Vec::new();
    }
    let mut divs = alloc::vec![BigInt::one()];
    for (p, e) in factorize(m) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}
