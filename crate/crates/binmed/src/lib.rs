//! Std companion to `binmed-core`: the theorem battery, the Monte Carlo
//! oracle, JSON/CSV output formats and the `binmed` command line.

pub mod cli;
pub mod format;
pub mod montecarlo;
pub mod verifier;

pub use montecarlo::{mc_median_check, McVerdict};
pub use verifier::{verify_theorem, CheckResult, VerificationReport};
