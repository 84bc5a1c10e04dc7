//! Exact verification of congruences for the Delannoy polynomials
//! `d_n(x) = sum_k C(n,k) C(x,k) 2^k`.
//!
//! The crate has three layers:
//!
//! * residue arithmetic modulo `p^e` (`modp`), prime utilities and the
//!   two-squares decomposition (`ntheory`), and O(p) sequence kernels
//!   (`sequences`);
//! * exact arbitrary-precision identity checks over the rationals
//!   (`identities`);
//! * the congruence suite (`suite`): every checkable statement about the
//!   sums `sum_k C(2k,k)/4^k d_k(x)^2` and their reductions, each returning
//!   a structured [`suite::VerificationRecord`].
//!
//! All values are immutable after construction and every operation is pure,
//! so independent primes can be verified concurrently with deterministic
//! results.

pub mod error;
pub mod identities;
pub mod modp;
pub mod ntheory;
pub mod sequences;
pub mod suite;

pub use error::{Error, Result};
pub use modp::{Modulus, Residue, Valuation, ValuatedResidue};
pub use ntheory::TwoSquares;
pub use suite::{StatementId, VerificationRecord};
