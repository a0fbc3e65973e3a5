//! Exact-arithmetic evaluation, cross-verification and reporting for the
//! summation identities of gibonacci sequences (the Fibonacci recurrence
//! with arbitrary integer initial values).
//!
//! The crate is organized as matched pairs: every closed-form evaluator in
//! [`sums`] has a brute-force counterpart in [`oracle`] that accumulates
//! the identity's left side literally, and [`verify`] compares the two
//! exactly over parameter grids. [`fixtures`] pins the classical special
//! cases (Fibonacci and Lucas) with their printed constants, including one
//! suspected erratum that is expected to fail as printed. Infinite
//! reciprocal sums are certified in [`sums::limit_reciprocal`] through
//! exact remainder decay rather than analytic convergence arguments.

pub mod exact;
pub mod family;
pub mod fixtures;
pub mod identity;
pub mod oracle;
pub mod report;
pub mod seq;
pub mod sums;
pub mod telescope;
pub mod verify;

pub use exact::{ExactInt, ExactRat};
pub use family::{SumArgs, SumError, SumFamilyId, ALL_FAMILIES};
pub use identity::IdentityCheck;
pub use oracle::OracleResult;
pub use seq::{Gibonacci, GibonacciParams};
pub use sums::LimitOutcome;
pub use verify::{Grid, VerificationReport};
