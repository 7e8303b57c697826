//! Counting representations of `n` as the sum plus the product of three or
//! four positive integers.
//!
//! ```
//! use sppk_core::representations::r3;
//!
//! // 8 = 1*1*3 + 1 + 1 + 3, in three orders.
//! let r = r3(8).unwrap();
//! assert_eq!(r.ordered_count, 3);
//! assert_eq!(r.solutions[0].coords(), &[1, 1, 3]);
//! ```
//!
//! Modules:
//!
//! * [`arithmetic`]: primality, factorization, divisors, τ_k, μ, segmented sieve.
//! * [`representations`]: R3, R4, S3 with brute-force oracles and fixed-coordinate counts.
//! * [`residue_sieve`]: forced residue classes and the large-sieve bound.
//! * [`search`]: parallel, resumable scans for non-representable `n`.
//! * [`stats`]: average orders, τ_k interval sums, record values.
//! * [`reference`]: published zero lists, and comparison against them.

pub mod arithmetic;
pub mod error;
pub mod reference;
pub mod representations;
pub mod residue_sieve;
pub mod search;
pub mod stats;

pub use arithmetic::{factorize, is_prime, Factorization};
pub use error::{Error, Result};
pub use representations::{r3, r4, s3, Form, RepResult, SolutionTuple};
pub use residue_sieve::{CoverMode, ResidueCover, SieveEvaluation};
pub use search::{ScanKind, ScanOptions, ScanState};
