//! Exact arithmetic for binomial medians.
//!
//! Everything in this crate is computed with arbitrary-precision integers and
//! canonical rationals; no floating point is used anywhere. The crate is
//! `no_std` and only needs `alloc`.
//!
//! - [`rational`] and [`combinatorics`]: the exact kernel.
//! - [`binom`]: pmf, CDF and survival function of `B(n, p)` at rational `p`.
//! - [`median`]: median classification for finite discrete distributions.
//! - [`poly`]: dense integer polynomials.
//! - [`critical`]: the critical probabilities `p_{n,k}` solving
//!   `B(k-1, n, p) = 1/2`, certified enclosures and irrationality certificates.

#![no_std]

extern crate alloc;

pub mod binom;
pub mod combinatorics;
pub mod critical;
mod error;
pub mod median;
pub mod poly;
pub mod rational;

pub use binom::Binomial;
pub use critical::{
    certify, critical_poly, derivative_identity_check, isolate_root, monotonicity_check,
    rational_root_scan, symmetry_identity_check, CertificateStatus, IdentityCheck,
    IrrationalityCertificate, RootEnclosure,
};
pub use error::{Error, Result};
pub use median::{check_median, median_binomial, median_finite, FiniteDiscreteDist, MedianClass, MedianResult};
pub use poly::IntPolynomial;
pub use rational::Rational;

pub use num_bigint::BigInt;
